#ifndef GENCOH_PROBLEM_HPP
#define GENCOH_PROBLEM_HPP

#include "gencoh/gcs.hpp"

#include <optional>
#include <string>
#include <vector>

// vendored single-header nlohmann/json
#include "json.hpp"

namespace gencoh {

constexpr const char* kProblemSchema = "gencoh-problem/1";
constexpr const char* kResultSchema = "gencoh-result/1";

struct ParseError : std::runtime_error {
    ParseError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), field(path) {}
    std::string field;
};

struct FormTerm {
    std::vector<std::size_t> indices;  // 1-based, strictly increasing
    GaussianRational coeff;
};

struct BracketEntry {
    std::size_t i = 0, j = 0;  // 1-based, i < j
    std::vector<std::pair<std::size_t, Rational>> out;
};

struct IdealSection {
    /// Either indices of algebra basis vectors spanning an ideal h of g
    /// (S is then built as {X - i omega(X) : X in h}), or explicit
    /// vectors in Dg_C coordinates (length 2m scalar strings).
    std::vector<std::size_t> h_indices;
    std::vector<Vec> vectors;
};

struct DeformSection {
    std::vector<FormTerm> epsilon;  // degree-2 terms in dual-frame indices
    std::size_t order = 2;
};

struct ProblemFile {
    std::string name;
    std::size_t dim = 0;
    std::vector<BracketEntry> brackets;
    std::size_t type_k = 0;
    std::vector<FormTerm> B;
    std::vector<FormTerm> omega;
    std::vector<std::vector<FormTerm>> omega_factors;
    std::optional<IdealSection> ideal;
    std::optional<DeformSection> deformation;
};

ProblemFile parse_problem(const nlohmann::json& j);
ProblemFile load_problem(const std::string& path);
nlohmann::json problem_to_json(const ProblemFile& p);

LieAlgebra build_algebra(const ProblemFile& p);
PureFormSpec build_spec(const ProblemFile& p);

/// S from the ideal section: either (1 - i omega) h for h_indices, or the
/// explicit vectors; returned in Dg_C coordinates (ambient 2m).
Subspace build_ideal_S(const ProblemFile& p, const PureFormSpec& spec);

}  // namespace gencoh

#endif

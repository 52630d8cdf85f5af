#pragma once

#include "eitrace/coweight.hpp"
#include "eitrace/hocolim.hpp"
#include "eitrace/json_io.hpp"
#include "eitrace/rep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eitrace {

// ---------------------------------------------------------------------------
// Named categories

FinCategory cyclic_group(std::size_t n);
/// Permutations of {0, ..., n-1}, (g o f)(x) = g(f(x)).
FinCategory symmetric_group(std::size_t n);
/// Objects 0..n-1; `leq[i][j]` must be a partial order.
FinCategory poset_category(const std::vector<std::vector<bool>>& leq);
/// The free category on (0,1) -> (1,1) <- (1,0), objects in that order.
FinCategory pushout_category();
/// 0 -> 1
FinCategory arrow_category();
/// Cyclic group of order n acting on points by the permutation `sigma`,
/// whose cycle lengths must divide n. Morphisms are (k, x) : x -> sigma^k(x).
FinCategory translation_groupoid(std::size_t n, const std::vector<std::size_t>& sigma);
/// Two objects x -> y where Aut(x) = C2 acts on I(x, y) freely (two arrows
/// swapped) or trivially (one arrow).
FinCategory ei_two_object(bool free_action);

struct CatalogEntry {
    std::string name;
    CategoryPtr category;
};

/// Fixed list of small EI categories covering posets, groups, products,
/// groupoids and mixed cases.
std::vector<CatalogEntry> catalog();

// ---------------------------------------------------------------------------
// Generators

enum class CategoryKind { Poset, Group, Cyclic, Symmetric, Product, Groupoid };

std::optional<CategoryKind> parse_kind(std::string_view name);
std::string kind_name(CategoryKind kind);

/// Random EI category of the given kind, deterministic in `seed`.
/// Posets have at most 6 elements, groups order at most 6, products and
/// groupoids at most about 30 morphisms.
FinCategory generate_category(CategoryKind kind, std::uint64_t seed);

/// Random presheaf with fibers of dimension at most `maxdim` and a random
/// natural twisted endomorphism with dimS, dimT in {1, 2}.
TwistedEndo generate_diagram(const CategoryPtr& base, std::uint64_t seed, std::size_t maxdim = 4);

/// Diagram with the given fiber dimensions and independent random actions,
/// for categories in which no two non-identity morphisms compose (such as
/// the pushout shape). Throws InvalidInput otherwise.
TwistedEndo generate_free_diagram(const CategoryPtr& base, const std::vector<std::size_t>& dims, std::uint64_t seed);

/// Basis of the natural endomorphisms of a presheaf, each as per-object matrices.
std::vector<std::vector<Matrix>> natural_endomorphisms(const Representation& a);

// ---------------------------------------------------------------------------
// Verification

struct OracleResult {
    std::string name;
    bool applicable = false;
    std::optional<Matrix> trace;
    std::string error;
    bool agrees = false;                 ///< trace equals the formula side
    std::vector<std::size_t> complex_dims;
    std::vector<std::size_t> homology_dims;
    bool chain_equals_homology = true;   ///< Lefschetz at chain and homology level
    bool h0_matches_colimit = true;      ///< dim and trace of H_0 against direct_colimit
    bool exact_resolution = true;        ///< resolution oracle only
};

struct TraceReport {
    bool ei = false;
    std::size_t characteristic = 1;
    std::size_t iso_classes = 0;
    TheoremCoefficients coefficients;
    LocalTraceTable local;
    Matrix formula;                      ///< sum of lambda times local traces
    std::vector<OracleResult> oracles;
    DirectColimit colimit;
    /// Some oracle produced a trace and every produced trace equals the formula.
    bool verdict() const;
    /// verdict() and every audit passed.
    bool audits_pass() const;
};

struct VerifyOptions {
    bool resolution = true;
    bool bar = true;
    bool group = true;
    ResolutionOptions resolution_options;
    /// Reused instead of recomputing; must be over opposite(I).
    const Resolution* resolution_cache = nullptr;
};

/// Throws NotEI; oracle failures are recorded per oracle.
TraceReport verify_theorem(const TwistedEndo& f, const VerifyOptions& options = {});

Json report_to_json(const TraceReport& report, const FinCategory& c);

/// Outcome of the witness check for one core pair (j, k).
struct WitnessCheck {
    std::size_t entry = 0;
    bool local_traces_match_zeta = false;
    bool oracles_return_identity = false;
    Rational coweighting_sum;            ///< sum_(i,h) lambda zeta_E(h, k); must be 1
};

std::vector<WitnessCheck> check_witnesses(const CategoryPtr& base, std::size_t dimS = 1,
                                          const VerifyOptions& options = {});

// ---------------------------------------------------------------------------
// Fuzzing

struct FuzzOptions {
    std::vector<CategoryKind> kinds{CategoryKind::Poset, CategoryKind::Group, CategoryKind::Product,
                                    CategoryKind::Groupoid};
    std::size_t cases = 200;
    std::uint64_t seed = 42;
    std::size_t maxdim = 4;
    std::size_t threads = 0; ///< 0 = hardware concurrency
};

struct FuzzCase {
    std::size_t index = 0;
    CategoryKind kind = CategoryKind::Poset;
    std::uint64_t seed = 0;
    std::size_t objects = 0;
    std::size_t morphisms = 0;
    bool verdict = false;
    bool audits = false;
    std::vector<std::string> oracles_agreeing;
    std::string error;
};

/// Seed of case i derived from the run seed; independent of scheduling.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

/// Runs the cases concurrently and returns them in case order.
std::vector<FuzzCase> fuzz(const FuzzOptions& options);

Json fuzz_to_json(const std::vector<FuzzCase>& cases, const FuzzOptions& options);

} // namespace eitrace

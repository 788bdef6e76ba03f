#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umbral/apostol.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus status);

struct Counterexample {
    std::string inputs;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Outcome of one alternative reading of an identity (for example the
/// printed constant versus the one forced by the generating function).
/// `matches` is empty when the reading is undefined at this point.
struct VariantOutcome {
    std::string form;
    std::optional<bool> matches;

    friend bool operator==(const VariantOutcome&, const VariantOutcome&) = default;
};

/// Result of one identity check at one parameter point. Comparisons are
/// exact; status is Fail exactly when a counterexample is present.
struct CheckReport {
    std::string check_id;
    UnifiedParams params;
    std::vector<std::pair<std::string, std::string>> aux;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Counterexample> first_counterexample;
    std::optional<std::string> discrepancy;
    std::optional<std::string> skip_reason;
    std::vector<VariantOutcome> variants;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct CheckInfo {
    std::string_view id;
    std::string_view description;
};

/// Every check id in canonical order, with a description of exactly what is
/// compared (including any rearrangement applied for well-definedness).
const std::vector<CheckInfo>& check_catalog();

/// Thread-safe memo of Y tables keyed by parameters.
class FamilyTables {
public:
    /// Y_0 .. Y_{n_max} (at least) for `params`.
    std::shared_ptr<const std::vector<Polynomial>> get(const UnifiedParams& params, std::size_t n_max);

    /// Y_n^{(order)} for the same k, lambda, alpha as `params`.
    Polynomial y(const UnifiedParams& params, unsigned order, std::size_t n);

private:
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> tables_;
};

// Individual checks. Each compares both sides for every n in its range and
// stops at the first mismatch.

CheckReport check_functional_expansion(FamilyTables& tables, const UnifiedParams& params, unsigned j, unsigned n_max);
CheckReport check_bracket_stirling(FamilyTables& tables, const UnifiedParams& params, unsigned j, unsigned n_max);
CheckReport check_corollary_sum(FamilyTables& tables, const UnifiedParams& params, unsigned j, unsigned n_max);
CheckReport check_derivative(FamilyTables& tables, const UnifiedParams& params, unsigned n_max);
CheckReport check_shift_up(FamilyTables& tables, const UnifiedParams& params, unsigned n_max);
CheckReport check_integral_formula(FamilyTables& tables, const UnifiedParams& params, const Rational& c, unsigned n_max);
CheckReport check_lemma3_ladder(FamilyTables& tables, const UnifiedParams& params, unsigned n_max);
CheckReport check_shift_identity(FamilyTables& tables, const UnifiedParams& params, unsigned n_max);
CheckReport check_lemma4_inverse(FamilyTables& tables, const UnifiedParams& params, unsigned n_max);
CheckReport check_rre2(FamilyTables& tables, const UnifiedParams& params, unsigned n_max);
CheckReport check_recurrence(FamilyTables& tables, const UnifiedParams& params, unsigned n_max);
CheckReport check_norlund(FamilyTables& tables, const UnifiedParams& params, unsigned n_max);
CheckReport check_multiplication(FamilyTables& tables, const UnifiedParams& params, unsigned m, unsigned n_max);

/// One report per target family (aux "relation" = bernoulli | euler | genocchi).
std::vector<CheckReport> check_family_conversions(FamilyTables& tables, const UnifiedParams& params, unsigned n_max);

CheckReport check_stirling_first_expansion(FamilyTables& tables, const UnifiedParams& params, unsigned n_max);

struct ParameterGrid {
    std::vector<Rational> lambdas;
    std::vector<Rational> alphas;
    std::vector<unsigned> ks{0, 1, 2, 3};
    std::vector<unsigned> vs{0, 1, 2, 3};
    unsigned n_max = 12;
    std::vector<unsigned> js{0, 1, 2, 3, 4};
    std::vector<unsigned> ms{1, 2, 3};
    std::vector<Rational> cs;

    /// lambda, alpha in {1, -1, 2, 1/2, 3, -2/3}; c in {1, 1/2, -1}.
    static ParameterGrid default_grid();

    /// Cartesian product filtered by UnifiedParams::valid(), ordered by
    /// k, v, then the lambda / alpha lists as given.
    std::vector<UnifiedParams> points() const;
};

/// Throws std::invalid_argument naming the first unknown id. "all" selects
/// the full catalog.
std::vector<std::string> resolve_selection(const std::vector<std::string>& ids);

/// Runs the selected checks over the grid using `jobs` worker threads.
/// The returned order is independent of `jobs`: sorted by check id, then
/// k, v, lambda, alpha, then auxiliary indices.
std::vector<CheckReport> run_suite(const ParameterGrid& grid, const std::vector<std::string>& selection,
                                   unsigned jobs = 1);

struct SuiteSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::size_t discrepancies = 0;
    /// One line per report carrying a discrepancy note.
    std::vector<std::string> findings;

    bool all_passed() const { return failed == 0; }
};

SuiteSummary summarize(const std::vector<CheckReport>& reports);

// Serialization (stable schema, rationals and polynomials as exact text).

std::string to_json(const CheckReport& report);
CheckReport report_from_json(std::string_view json);
std::string to_text(const CheckReport& report);
/// "check_id k=.. v=.. lambda=.. alpha=.. aux=.." identifying one report.
std::string report_label(const CheckReport& report);
std::string to_text(const SuiteSummary& summary);
std::string to_json(const SuiteSummary& summary);
/// {"reports": [...], "summary": {...}} with one report per line.
std::string to_json_document(const std::vector<CheckReport>& reports);

}  // namespace umbral

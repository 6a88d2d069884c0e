#pragma once

// Exact machine verification of the finite harmonic-sum and binomial
// identities. Every comparison is between exact rationals; a failing suite
// carries the first offending inputs with both sides rendered as p/q.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "harmsum/exact.hpp"
#include "harmsum/harmonic.hpp"
#include "harmsum/snm.hpp"

namespace harmsum {

enum class Status { pass, fail };

struct Counterexample {
    std::string inputs;
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    std::string identity_name;
    std::string range_tested;
    Status status = Status::pass;
    std::optional<Counterexample> counterexample;
    std::optional<std::uint64_t> seed;
    std::string note;
    std::int64_t checks = 0;

    bool passed() const { return status == Status::pass; }
};

inline constexpr std::uint64_t kDefaultSeed = 20151218;

/// Shared immutable tables. Suites build what they need when a slot is empty;
/// tests may install a deliberately corrupted S-table here.
struct SuiteContext {
    std::shared_ptr<const SnmTable> snm;
    std::shared_ptr<const HarmonicTable> harmonic;
};

/// snm_direct against the chain enumeration (within kNestedLimit) and the table.
IdentityReport verify_dilcher(int n_max, int m_max, SuiteContext ctx = {});

/// direct = nested = table = Bell = Newton = closed form, each where defined.
IdentityReport verify_five_way(int n_max, int m_max, SuiteContext ctx = {});

/// sum (-1)^{k-1} C(n,k) S_k(m)/k = H_n^(m+1) and its inverse
/// sum (-1)^{k-1} C(n,k) H_k^(m+1) = S_n(m)/n.
IdentityReport verify_corollary22(int n_max, int m_max, SuiteContext ctx = {});

/// sum (-1)^{k-1} C(n,k) H_k/k = H_n^(2)
IdentityReport verify_sun_zhao(int n_max, SuiteContext ctx = {});

/// sum (-1)^{k-1} C(n,k) (1/k) sum_{j<=k} H_j/j = H_n^(3)
IdentityReport verify_bang(int n_max, SuiteContext ctx = {});

/// Forward differences of k^m, random rational polynomials, and the
/// P(a + bt) and (xt + y)^m specializations.
IdentityReport verify_boole_gould(int n_max, int trials, std::uint64_t seed = kDefaultSeed);

/// lemma11_lhs = lemma11_rhs on pseudo-random rational sequences.
IdentityReport verify_lemma11(int n_max, int trials, std::uint64_t seed = kDefaultSeed);

/// sum_{k<=n} P_j(H_k)/k = P_{j+1}(H_n)/(j+1) for j = 1..4.
IdentityReport verify_harmonic_ladder(int n_max, SuiteContext ctx = {});

enum class CuriousForm {
    minus,   // (H_n^3 - H_n^(3)) / 3, confirmed by direct summation
    printed  // (H_n^3 + H_n^(3)) / 3; fails already at n = 1
};

/// sum_{k<=n} H_k H_{k-1}/k against the chosen right-hand side, plus the
/// telescoping step H_k^3 - H_{k-1}^3 = 1/k^3 + 3 H_k H_{k-1}/k.
IdentityReport verify_curious(int n_max, CuriousForm form = CuriousForm::minus, SuiteContext ctx = {});

/// stirling2(n,m) = (-1)^{m-1} S_m(-n)/m! for 1 <= m <= n <= n_max, and
/// S_n(-m) = 0 for m < n.
IdentityReport verify_stirling_bridge(int n_max);

struct SuiteConfig {
    int dilcher_n = 100, dilcher_m = 5;
    int five_way_n = 60, five_way_m = 6;
    int corollary_n = 100, corollary_m = 5;
    int sun_zhao_n = 100;
    int bang_n = 100;
    int boole_n = 20, boole_trials = 200;
    int lemma_n = 50, lemma_trials = 100;
    int ladder_n = 100;
    int curious_n = 100;
    int stirling_n = 12;
    std::uint64_t seed = kDefaultSeed;

    /// Every range set to zero; run_all_suites then produces no reports.
    static SuiteConfig empty();
};

/// Names accepted by run_suite, in run order.
const std::vector<std::string>& suite_names();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
/// Returns nothing when the configured range for that suite is zero.
std::optional<IdentityReport> run_suite(const std::string& name, const SuiteConfig& config, SuiteContext ctx = {});

std::vector<IdentityReport> run_all_suites(const SuiteConfig& config, SuiteContext ctx = {});

bool all_passed(const std::vector<IdentityReport>& reports);

/// One line: "PASS dilcher n<=10;m<=4 (120 checks)" plus the counterexample on failure.
std::string to_text(const IdentityReport& report);

/// CSV record matching report_csv_header().
std::string to_csv_record(const IdentityReport& report);
std::string report_csv_header();

}  // namespace harmsum

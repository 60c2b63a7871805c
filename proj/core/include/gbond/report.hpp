#pragma once

#include <string>
#include <vector>

#include "gbond/bondage.hpp"
#include "gbond/domination.hpp"
#include "gbond/generators.hpp"

namespace gbond {

// One verified (n-3)-regular graph: certificates for gamma and b plus the
// theorem comparison. pass iff gamma == 2 and b == n-3.
struct VerificationEntry {
    int n;
    CyclePartition partition;
    DominationCertificate domination;
    BondageCertificate bondage;
    int expected_bondage;
    bool pass;
    double elapsed_ms;
};

struct VerificationReport {
    int n_min;
    int n_max;
    std::vector<VerificationEntry> entries;
    int passed = 0;
    int failed = 0;
    bool all_pass() const { return failed == 0; }
};

// Exhaustive check of b(G) = n-3 over every (n-3)-regular graph with
// n_min <= n <= n_max. Graphs may be solved on `jobs` worker threads; entry
// order (by n, then partition enumeration order) and all certificates are
// identical to the sequential run.
VerificationReport verify_theorem(int n_min, int n_max, int jobs = 1);

struct KnownValueRow {
    std::string name;
    int n;
    int computed;
    int expected;
    bool pass;
};

struct KnownValueReport {
    std::vector<KnownValueRow> rows;
    bool all_pass() const;
};

// Regression table of classical exact values: b(K_n) = ceil(n/2) for
// n = 2..8 and b(K_{2,...,2}) = 2t-1 for t = 2..4.
KnownValueReport known_values();

// Emitters. JSON is deterministic except for the per-entry elapsed_ms
// field, which is excluded from the determinism contract.
std::string to_json(const VerificationReport& report);
std::string to_table(const VerificationReport& report);
std::string to_json(const KnownValueReport& report);
std::string to_table(const KnownValueReport& report);

} // namespace gbond

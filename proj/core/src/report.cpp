#include "gbond/report.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace gbond {

namespace {

using ordered_json = nlohmann::ordered_json;

VerificationEntry solve_entry(int n, const CyclePartition& partition, const Graph& g) {
    const auto t0 = std::chrono::steady_clock::now();
    DominationCertificate dom = domination_number(g);
    BondageCertificate bond = bondage_number(g);
    const auto t1 = std::chrono::steady_clock::now();
    const int expected = n - 3;
    const bool pass = dom.gamma == 2 && bond.b == expected;
    return {n,        partition, std::move(dom), std::move(bond), expected, pass,
            std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

ordered_json witness_edges_json(const std::vector<Edge>& edges) {
    ordered_json out = ordered_json::array();
    for (const Edge& e : edges)
        out.push_back({e.u, e.v});
    return out;
}

} // namespace

VerificationReport verify_theorem(int n_min, int n_max, int jobs) {
    if (n_min < 4 || n_min > n_max || n_max > kMaxVertices)
        throw std::invalid_argument("order range must satisfy 4 <= n_min <= n_max <= " +
                                    std::to_string(kMaxVertices));
    if (jobs < 1)
        throw std::invalid_argument("jobs must be >= 1");

    struct Task {
        int n;
        CyclePartition partition;
        Graph graph;
    };
    std::vector<Task> tasks;
    for (int n = n_min; n <= n_max; ++n)
        for (auto& [partition, g] : enumerate_n_minus_3_regular(n))
            tasks.push_back({n, partition, std::move(g)});

    std::vector<std::optional<VerificationEntry>> results(tasks.size());
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            results[i] = solve_entry(tasks[i].n, tasks[i].partition, tasks[i].graph);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                results[i] = solve_entry(tasks[i].n, tasks[i].partition, tasks[i].graph);
        };
        std::vector<std::thread> pool;
        const std::size_t count = std::min<std::size_t>(jobs, tasks.size());
        pool.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }

    VerificationReport report{n_min, n_max, {}, 0, 0};
    report.entries.reserve(tasks.size());
    for (auto& entry : results) {
        (entry->pass ? report.passed : report.failed) += 1;
        report.entries.push_back(std::move(*entry));
    }
    return report;
}

bool KnownValueReport::all_pass() const {
    for (const KnownValueRow& row : rows)
        if (!row.pass)
            return false;
    return true;
}

KnownValueReport known_values() {
    KnownValueReport report;
    for (int n = 2; n <= 8; ++n) {
        const int computed = bondage_number(complete_graph(n)).b;
        const int expected = (n + 1) / 2;
        report.rows.push_back({"K" + std::to_string(n), n, computed, expected, computed == expected});
    }
    for (int t = 2; t <= 4; ++t) {
        std::string name = "K_{2";
        for (int i = 1; i < t; ++i) name += ",2";
        name += "}";
        const int computed = bondage_number(cocktail_party(t)).b;
        const int expected = 2 * t - 1;
        report.rows.push_back({std::move(name), 2 * t, computed, expected, computed == expected});
    }
    return report;
}

std::string to_json(const VerificationReport& report) {
    ordered_json out;
    out["n_min"] = report.n_min;
    out["n_max"] = report.n_max;
    out["entries"] = ordered_json::array();
    for (const VerificationEntry& e : report.entries) {
        ordered_json entry;
        entry["n"] = e.n;
        entry["partition"] = e.partition.parts();
        entry["gamma"] = e.domination.gamma;
        entry["bondage"] = e.bondage.b;
        entry["expected_bondage"] = e.expected_bondage;
        entry["gamma_witness"] = e.domination.witness.to_vector();
        entry["bondage_witness"] = witness_edges_json(e.bondage.witness);
        entry["status"] = e.pass ? "pass" : "fail";
        entry["elapsed_ms"] = e.elapsed_ms;
        out["entries"].push_back(std::move(entry));
    }
    out["summary"] = {{"graphs", report.entries.size()},
                      {"passed", report.passed},
                      {"failed", report.failed},
                      {"status", report.all_pass() ? "pass" : "fail"}};
    return out.dump(2);
}

std::string to_table(const VerificationReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(4) << "n" << std::setw(14) << "partition" << std::setw(7)
        << "gamma" << std::setw(4) << "b" << std::setw(10) << "expected" << std::setw(8)
        << "status" << "ms\n";
    for (const VerificationEntry& e : report.entries) {
        out << std::left << std::setw(4) << e.n << std::setw(14) << e.partition.to_string()
            << std::setw(7) << e.domination.gamma << std::setw(4) << e.bondage.b << std::setw(10)
            << e.expected_bondage << std::setw(8) << (e.pass ? "pass" : "FAIL") << std::fixed
            << std::setprecision(1) << e.elapsed_ms << "\n";
    }
    out << report.entries.size() << " graphs, " << report.passed << " passed, " << report.failed
        << " failed -> " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string to_json(const KnownValueReport& report) {
    ordered_json out;
    out["rows"] = ordered_json::array();
    int passed = 0;
    for (const KnownValueRow& r : report.rows) {
        passed += r.pass ? 1 : 0;
        out["rows"].push_back({{"name", r.name},
                               {"n", r.n},
                               {"computed", r.computed},
                               {"expected", r.expected},
                               {"status", r.pass ? "pass" : "fail"}});
    }
    out["summary"] = {{"rows", report.rows.size()},
                      {"passed", passed},
                      {"failed", report.rows.size() - passed},
                      {"status", report.all_pass() ? "pass" : "fail"}};
    return out.dump(2);
}

std::string to_table(const KnownValueReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(14) << "graph" << std::setw(4) << "n" << std::setw(10)
        << "computed" << std::setw(10) << "expected" << "status\n";
    for (const KnownValueRow& r : report.rows) {
        out << std::left << std::setw(14) << r.name << std::setw(4) << r.n << std::setw(10)
            << r.computed << std::setw(10) << r.expected << (r.pass ? "pass" : "FAIL") << "\n";
    }
    out << report.rows.size() << " rows -> " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

} // namespace gbond

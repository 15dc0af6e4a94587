#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "symfix/caps.hpp"
#include "symfix/graph.hpp"

namespace symfix {

/// Graphs on n vertices, one per isomorphism class. Every edge mask over
/// the C(n,2) vertex pairs is kept exactly when no relabeling produces a
/// smaller adjacency bit-string (bits compared in pair order), so the
/// result is deterministic and needs no external catalog. Throws CapError
/// when n exceeds enumeration_cap; the ceiling is 7 regardless, and the
/// n = 7 run takes minutes, which is why it is opt-in.
std::vector<Graph> enumerate_graphs(int n, bool connected_only, int enumeration_cap = 6);
std::vector<Graph> enumerate_connected_graphs(int n, int enumeration_cap = 6);

struct IngestResult {
    std::vector<Graph> graphs;
    std::vector<std::string> diagnostics;  // "line N: why" for rejected lines
};

/// One graph6 value per line; blank lines are skipped, malformed lines are
/// reported in diagnostics and reading continues.
IngestResult ingest_graph6_lines(std::istream& in);

struct CheckStats {
    std::uint64_t checked = 0;  // passed + failed
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;
    std::map<std::string, std::uint64_t> skip_reasons;
};

struct SurveyRow {
    std::string graph6;
    std::string check;
    std::string verdict;  // pass | fail | skip
    std::string details;  // violation values, or the skip reason
};

struct SurveyReport {
    std::string catalog;  // provenance: enumeration parameters or input digest
    std::uint64_t graphs = 0;
    std::map<std::string, CheckStats> checks;
    std::vector<SurveyRow> rows;             // sorted by (graph6, check)
    std::vector<SurveyRow> counterexamples;  // the fail rows, same order

    bool pass() const { return counterexamples.empty(); }
};

/// Runs the whole structural check battery against every catalog graph.
/// A check whose hypotheses a graph does not meet is recorded as a skip
/// with the reason, and a resource ceiling is a skip ("cap"), never an
/// abort. The report depends only on the catalog contents, not its order.
SurveyReport verify_all(const std::vector<Graph>& catalog, const std::string& provenance,
                        const Caps& caps = {});

/// graph6,theorem,verdict,details rows; byte-identical across reruns.
std::string to_csv(const SurveyReport& r);

nlohmann::ordered_json to_json(const SurveyReport& r);

}  // namespace symfix

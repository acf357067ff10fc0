#pragma once

#include <string>

#include "hylag/hypergraph.hpp"
#include "hylag/solver.hpp"

namespace hylag {

// Interchange format: {"r": int, "n": int, "edges": [[v1,...,vr], ...]},
// edges ascending within tuples and lexicographic across tuples.
// Extra keys (e.g. "manifest") are ignored by the parser.
Hypergraph parse_graph_json(const std::string& text);
Hypergraph read_graph_json(const std::string& path);
std::string graph_to_json(const Hypergraph& g, const std::string& manifest_json = "");
void write_graph_json(const Hypergraph& g, const std::string& path,
                      const std::string& manifest_json = "");

// SolveReport serialization:
// {"lambda": float, "weights": [float], "kkt_residual": float,
//  "restarts_used": int, "iterations": int, "converged": bool, "seed": int}
// floats printed with %.17g so parsing round-trips exactly.
std::string solve_report_to_json(const SolveReport& rep, const std::string& manifest_json = "");
SolveReport parse_solve_report_json(const std::string& text);
SolveReport read_solve_report_json(const std::string& path);

// manifest embedded in a JSON report ("manifest" key) or in a CSV
// ("# manifest: {...}" comment line); empty string when absent
std::string extract_manifest_json(const std::string& file_text);

// %.12g with '.' decimal separator, used for CSV and console output
std::string fmt_double(double v);
// %.17g, used inside JSON data files
std::string fmt_double_exact(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hylag

// io.hpp -- JSON input/output for multi-maps, matrices, trajectories, and
// the report documents printed by the command line tool.

#pragma once

#include "markovmm/dynamics.hpp"
#include "markovmm/errors.hpp"
#include "markovmm/geometry.hpp"
#include "markovmm/multimap.hpp"
#include "markovmm/realize.hpp"
#include "markovmm/sft.hpp"
#include "markovmm/trajectory.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace markovmm {

using Json = nlohmann::ordered_json;

// Multi-map documents: {"ambient": ["p/q","p/q"], "partition": [...],
// "symbols": [{"id", "class", "D", "R", "branch"?}]}. All rationals are
// strings. Unknown fields are rejected.
MarkovMultiMap multimap_from_json(const Json& doc);
Json multimap_to_json(const MarkovMultiMap& m);

// Matrix documents: {"alphabet": [...], "rows": [[0,1,...], ...]}.
AdjacencyMatrix matrix_from_json(const Json& doc);
Json matrix_to_json(const AdjacencyMatrix& m);

// Trajectory documents: a flat list of "p/q" strings.
std::vector<Rat> trajectory_from_json(const Json& doc);
Json trajectory_to_json(const std::vector<Rat>& points);

Json parse_json_text(const std::string& text);  // Error(bad_input) on bad syntax
Json load_json_file(const std::string& path);
std::string dump_json(const Json& doc);  // 2-space indent, trailing newline

// Fixed "%.15g" rendering so identical values always produce identical bytes.
std::string format_double(double v);

// Report builders used by the CLI and golden tests.
Json violations_to_json(const std::vector<Violation>& violations);
Json interval_to_json(const IntervalQ& iv);
Json decomposition_to_json(const AdjacencyMatrix& matrix, const Decomposition& d);
Json entropy_to_json(const EntropyResult& r, bool log2_display);
Json certificate_to_json(const AdjacencyMatrix& m, const WordCertificate& cert);
Json expansion_to_json(const ExpansionReport& r);
Json decay_to_json(const DecayReport& r);
Json class_f_verdict_to_json(const AdjacencyMatrix& m, const ClassFVerdict& v);
Json crossing_to_json(const std::optional<CrossingWitness>& w);
Json proper_param_to_json(const ProperParamReport& r);
Json realization_to_json(const RealizationOutput& out);
Json realization_report_to_json(const AdjacencyMatrix& m, const RealizationReport& r);
Json label_check_to_json(const LabelCheck& c);

}  // namespace markovmm

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "plethax/abacus.hpp"
#include "plethax/expansion.hpp"
#include "plethax/partition.hpp"
#include "plethax/polynomial.hpp"
#include "plethax/process.hpp"

namespace plethax {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// "5,3,3,2,2,1"; the empty string is the empty partition.
Partition parse_partition(std::string_view text);
/// "0,2,0,0,1,0".
Composition parse_composition(std::string_view text);
/// "1:4,3:2,4:5"; rejects duplicate labels and duplicate positions.
LabelledAbacus parse_abacus(std::string_view text);

enum class OutputFormat { plain, json, latex };

OutputFormat parse_format(std::string_view text);

/// "s[4] - s[3,1] + s[2,2]"; "0" for the empty expansion.
std::string format_plain(const SchurExpansion& e);
/// "s_{(4)} - s_{(3,1)} + s_{(2,2)}".
std::string format_latex(const SchurExpansion& e);

Json to_json(const Partition& p);
Json to_json(const SchurExpansion& e);
SchurExpansion expansion_from_json(const Json& j);

/// {"schema": 1, "command": ..., "inputs": ..., "result": ...}.
Json make_record(std::string_view command, Json inputs, Json result);

/// One line per strip: "strip 1: (5,3,3,2,2,1) -> (5,4,4,4,3,1) top=2 bottom=5 sign=-1",
/// or "empty chain".
std::string format_chain(const BorderStripChain& chain);
Json to_json(const BorderStripChain& chain);

/// Step-by-step text log followed by an "outcome:" line.
std::string format_trace(const ProcessTrace& trace);
/// One JSON object per step, then one outcome object.
Json trace_records(const ProcessTrace& trace);
/// trace_records as JSON Lines.
std::string format_trace_jsonl(const ProcessTrace& trace);

/// One term per line, "coef * x1^e1 ... xN^eN", in graded reverse lex order.
std::string format_polynomial(const SparsePolynomial& f);
Json to_json(const SparsePolynomial& f);
SparsePolynomial polynomial_from_json(const Json& j);

}  // namespace plethax

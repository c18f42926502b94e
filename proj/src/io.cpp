#include "plethax/io.hpp"

#include <charconv>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace plethax {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

long long parse_integer(std::string_view token, std::string_view what) {
  token = strip(token);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  if (strip(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  for (auto tok : split(text, ',')) {
    const long long v = parse_integer(tok, what);
    if (v < 0 || v > std::numeric_limits<int>::max())
      throw std::invalid_argument(std::string(what) + " entries must be nonnegative integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string plain_name(const Partition& p) {
  std::string s = "s[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
  return s + "]";
}

std::string latex_name(const Partition& p) {
  if (p.empty()) return "s_{\\varnothing}";
  return "s_{" + p.to_string() + "}";
}

template <class Name>
std::string format_terms(const SchurExpansion& e, Name name, const char* times) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : e.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1) out += mag.str() + times;
    out += name(lambda);
    first = false;
  }
  return out;
}

Json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(c));
  return Json(c.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

}  // namespace

Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text, "partition")); }

Composition parse_composition(std::string_view text) { return Composition(parse_int_list(text, "composition")); }

LabelledAbacus parse_abacus(std::string_view text) {
  std::vector<std::pair<std::size_t, int>> pairs;
  std::set<int> labels;
  for (auto tok : split(text, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("abacus entries are pos:label, got '" + std::string(strip(tok)) + "'");
    const long long pos = parse_integer(tok.substr(0, colon), "abacus position");
    const long long label = parse_integer(tok.substr(colon + 1), "bead label");
    if (pos < 0 || label < 1) throw std::invalid_argument("abacus positions must be >= 0 and labels >= 1");
    if (!labels.insert(static_cast<int>(label)).second)
      throw std::invalid_argument("duplicate bead label " + std::to_string(label));
    pairs.emplace_back(static_cast<std::size_t>(pos), static_cast<int>(label));
  }
  return LabelledAbacus::from_pairs(pairs);
}

OutputFormat parse_format(std::string_view text) {
  if (text == "plain") return OutputFormat::plain;
  if (text == "json") return OutputFormat::json;
  if (text == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string format_plain(const SchurExpansion& e) { return format_terms(e, plain_name, "*"); }

std::string format_latex(const SchurExpansion& e) { return format_terms(e, latex_name, " "); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const SchurExpansion& e) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : e.terms()) terms.push_back({{"partition", to_json(lambda)}, {"coefficient", integer_json(c)}});
  return Json{{"terms", std::move(terms)}};
}

SchurExpansion expansion_from_json(const Json& j) {
  SchurExpansion e;
  for (const auto& term : j.at("terms"))
    e.add(Partition(term.at("partition").get<std::vector<int>>()), integer_from_json(term.at("coefficient")));
  return e;
}

Json make_record(std::string_view command, Json inputs, Json result) {
  return Json{{"schema", kSchemaVersion},
              {"command", std::string(command)},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)}};
}

std::string format_chain(const BorderStripChain& chain) {
  if (chain.length() == 0) return "empty chain\n";
  std::string out;
  for (std::size_t j = 0; j < chain.length(); ++j) {
    out += "strip " + std::to_string(j + 1) + ": " + chain.shapes[j].to_string() + " -> " +
           chain.shapes[j + 1].to_string() + " top=" + std::to_string(chain.tops[j]) +
           " bottom=" + std::to_string(chain.bottoms[j]) + " sign=" + (chain.strip_signs[j] > 0 ? "+1" : "-1") + "\n";
  }
  return out;
}

Json to_json(const BorderStripChain& chain) {
  Json strips = Json::array();
  for (std::size_t j = 0; j < chain.length(); ++j)
    strips.push_back({{"inner", to_json(chain.shapes[j])},
                      {"outer", to_json(chain.shapes[j + 1])},
                      {"top", chain.tops[j]},
                      {"bottom", chain.bottoms[j]},
                      {"sign", chain.strip_signs[j]}});
  return Json{{"r", chain.r}, {"strips", std::move(strips)}};
}

namespace {

Json outcome_json(const ProcessTrace& trace) {
  if (const auto* ok = std::get_if<Successful>(&trace.outcome))
    return Json{{"outcome", "successful"},
                {"moves", trace.moves.size()},
                {"final", to_pairs_string(ok->final_abacus)},
                {"shape", to_json(shape(ok->final_abacus))}};
  const auto& bad = std::get<Unsuccessful>(trace.outcome);
  return Json{{"outcome", "unsuccessful"},
              {"moves", trace.moves.size()},
              {"bead", bad.bead},
              {"blocker", bad.blocker},
              {"scan_position", bad.scan_position},
              {"collision_position", bad.collision_position}};
}

}  // namespace

std::string format_trace(const ProcessTrace& trace) {
  std::ostringstream os;
  os << "abacus: " << to_pairs_string(trace.initial) << "\n";
  os << "beta: " << trace.beta.to_string() << "\n";
  os << "r: " << trace.r << "\n";
  os << "shape: " << shape(trace.initial).to_string() << "\n";
  std::size_t move_index = 0;
  for (const auto& step : trace.steps) {
    os << "i=" << step.position << " bead=";
    if (step.bead == 0)
      os << ".";
    else
      os << step.bead;
    os << " " << to_string(step.action);
    if (step.action == StepAction::moved) {
      const auto& mv = trace.moves.at(move_index++);
      os << " " << mv.from << "->" << mv.to << " top=" << mv.top << " alpha=" << step.remaining->to_string()
         << " shape=" << shape(*step.abacus).to_string() << " abacus=" << to_pairs_string(*step.abacus);
    } else if (step.action == StepAction::collided) {
      const auto& bad = std::get<Unsuccessful>(trace.outcome);
      os << " with bead " << bad.blocker << " at position " << bad.collision_position;
    }
    os << "\n";
  }
  if (const auto* ok = std::get_if<Successful>(&trace.outcome)) {
    os << "outcome: successful moves=" << trace.moves.size() << " final=" << to_pairs_string(ok->final_abacus)
       << " shape=" << shape(ok->final_abacus).to_string() << "\n";
  } else {
    const auto& bad = std::get<Unsuccessful>(trace.outcome);
    os << "outcome: unsuccessful bead=" << bad.bead << " blocker=" << bad.blocker << " i=" << bad.scan_position
       << " collision=" << bad.collision_position << "\n";
  }
  return os.str();
}

Json trace_records(const ProcessTrace& trace) {
  Json records = Json::array();
  std::size_t move_index = 0;
  for (const auto& step : trace.steps) {
    Json rec{{"i", step.position}, {"bead", step.bead}, {"action", to_string(step.action)}};
    if (step.action == StepAction::moved) {
      const auto& mv = trace.moves.at(move_index++);
      rec["from"] = mv.from;
      rec["to"] = mv.to;
      rec["top"] = mv.top;
    }
    rec["alpha"] = step.remaining->entries();
    rec["abacus"] = to_pairs_string(*step.abacus);
    records.push_back(std::move(rec));
  }
  records.push_back(outcome_json(trace));
  return records;
}

std::string format_trace_jsonl(const ProcessTrace& trace) {
  std::string out;
  for (const auto& rec : trace_records(trace)) out += rec.dump() + "\n";
  return out;
}

std::string format_polynomial(const SparsePolynomial& f) {
  if (f.is_zero()) return "0\n";
  std::string out;
  for (const auto& [e, c] : f.sorted_terms()) {
    out += c.str() + " *";
    for (std::size_t i = 0; i < e.size(); ++i) out += " x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
    out += "\n";
  }
  return out;
}

Json to_json(const SparsePolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.sorted_terms()) terms.push_back({{"coefficient", integer_json(c)}, {"exponents", e}});
  return Json{{"schema", kSchemaVersion}, {"n_vars", f.n_vars()}, {"terms", std::move(terms)}};
}

SparsePolynomial polynomial_from_json(const Json& j) {
  SparsePolynomial f(j.at("n_vars").get<std::size_t>());
  for (const auto& term : j.at("terms"))
    f.add_term(term.at("exponents").get<Exponent>(), integer_from_json(term.at("coefficient")));
  return f;
}

}  // namespace plethax

#include "convcode/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "convcode/errors.hpp"

namespace convcode::io {

namespace {

json pairs(std::size_t code, const IndexSet& positions) {
  json out = json::array();
  for (std::size_t p : positions) out.push_back({code + 1, p + 1});
  return out;
}

SymbolId pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw UsageError("symbol id must be a [code, position] pair");
  const auto code = j[0].get<std::int64_t>();
  const auto pos = j[1].get<std::int64_t>();
  if (code < 1 || pos < 1) throw UsageError("symbol ids are one-based");
  return {static_cast<std::size_t>(code - 1), static_cast<std::size_t>(pos - 1)};
}

// Split a flat list of pairs into per-initial-code position lists.
std::vector<IndexSet> group_by_code(const json& list, std::size_t t1, const char* what) {
  std::vector<IndexSet> out(t1);
  for (const auto& item : list) {
    const SymbolId id = pair_from_json(item);
    if (id.code >= t1)
      throw UsageError(std::string(what) + ": symbol refers to code " + std::to_string(id.code + 1) +
                       " but there are only " + std::to_string(t1) + " initial codes");
    out[id.code].push_back(id.position);
  }
  return out;
}

json grouped_pairs(const std::vector<IndexSet>& per_code) {
  json out = json::array();
  for (std::size_t i = 0; i < per_code.size(); ++i)
    for (const auto& p : pairs(i, per_code[i])) out.push_back(p);
  return out;
}

Matrix matrix_json(const Field& f, const json& j) {
  return matrix_from_lines(f, j.get<std::vector<std::string>>());
}

json merge_to_json(const MergePlan& plan) {
  const std::size_t t1 = plan.params.t1();
  json j;
  j["kind"] = "merge";
  j["field"] = field_to_json(plan.field());
  j["params"] = params_to_json(plan.params);
  j["initial_codes"] = json::array();
  for (const auto& c : plan.initial) j["initial_codes"].push_back(spec_to_json(c));
  j["final_codes"] = json::array({spec_to_json(plan.final_code)});
  j["S"] = json::array();
  for (std::size_t i : plan.s) j["S"].push_back(i + 1);
  j["unchanged"] = json::array({grouped_pairs(plan.unchanged)});
  j["read"] = json::array({grouped_pairs(plan.read)});
  json written = json::array();
  for (std::size_t p = 0; p < plan.written_count(); ++p) written.push_back({t1 + 1, p + 1});
  j["written"] = json::array({written});
  json punctured = json::array();
  json blocks = json::array();
  for (std::size_t i = 0; i < t1; ++i) {
    if (plan.punctured_checks[i])
      punctured.push_back({{"code", i + 1},
                           {"positions", pairs(i, plan.punctured_positions[i])},
                           {"H", to_lines(*plan.punctured_checks[i])}});
    if (plan.unchanged_blocks[i])
      blocks.push_back({{"code", i + 1}, {"H", to_lines(*plan.unchanged_blocks[i])}});
  }
  j["matrices"] = {{"punctured", punctured},
                   {"unchanged_blocks", blocks},
                   {"written_block", to_lines(plan.written_block)}};
  return j;
}

MergePlan merge_from_json(const json& j) {
  const Field f = field_from_json(j.at("field"));
  const ConvertParams params = params_from_json(j.at("params"));
  if (!params.is_merge()) throw UsageError("merge plan: params must have exactly one final code");
  const std::size_t t1 = params.t1();
  MergePlan plan{params,
                 {},
                 spec_from_json(j.at("final_codes").at(0)),
                 {},
                 group_by_code(j.at("unchanged").at(0), t1, "unchanged"),
                 group_by_code(j.at("read").at(0), t1, "read"),
                 std::vector<IndexSet>(t1),
                 std::vector<std::optional<Matrix>>(t1),
                 std::vector<std::optional<Matrix>>(t1),
                 matrix_json(f, j.at("matrices").at("written_block"))};
  for (const auto& c : j.at("initial_codes")) plan.initial.push_back(spec_from_json(c));
  for (const auto& i : j.at("S")) {
    const auto idx = i.get<std::int64_t>();
    if (idx < 1 || static_cast<std::size_t>(idx) > t1) throw UsageError("merge plan: S index out of range");
    plan.s.push_back(static_cast<std::size_t>(idx - 1));
  }
  for (const auto& entry : j.at("matrices").at("punctured")) {
    const auto code = entry.at("code").get<std::size_t>();
    if (code < 1 || code > t1) throw UsageError("merge plan: punctured code index out of range");
    plan.punctured_positions[code - 1] = group_by_code(entry.at("positions"), t1, "positions")[code - 1];
    plan.punctured_checks[code - 1] = matrix_json(f, entry.at("H"));
  }
  for (const auto& entry : j.at("matrices").at("unchanged_blocks")) {
    const auto code = entry.at("code").get<std::size_t>();
    if (code < 1 || code > t1) throw UsageError("merge plan: block code index out of range");
    plan.unchanged_blocks[code - 1] = matrix_json(f, entry.at("H"));
  }
  plan.check_well_formed();
  return plan;
}

json split_to_json(const SplitPlan& plan) {
  json j;
  j["kind"] = "split";
  j["field"] = field_to_json(plan.field());
  j["params"] = params_to_json(plan.params);
  j["initial_codes"] = json::array({spec_to_json(plan.initial)});
  j["final_codes"] = json::array();
  for (const auto& c : plan.finals) j["final_codes"].push_back(spec_to_json(c));
  j["unchanged"] = json::array();
  j["read"] = json::array();
  j["written"] = json::array();
  for (std::size_t t = 0; t < plan.finals.size(); ++t) {
    j["unchanged"].push_back(pairs(0, plan.unchanged[t]));
    j["read"].push_back(pairs(0, plan.reads_for(t)));
    json w = json::array();
    for (std::size_t p = 0; p < plan.finals[t].n - plan.unchanged[t].size(); ++p) w.push_back({t + 2, p + 1});
    j["written"].push_back(w);
  }
  j["privileged"] = plan.privileged ? json(*plan.privileged + 1) : json(nullptr);
  j["V"] = pairs(0, plan.extra_reads);
  if (plan.punctured_check)
    j["matrices"] = {{"punctured",
                      {{"positions", pairs(0, plan.punctured_positions)},
                       {"H", to_lines(*plan.punctured_check)}}}};
  else
    j["matrices"] = json::object();
  return j;
}

SplitPlan split_from_json(const json& j) {
  const Field f = field_from_json(j.at("field"));
  const ConvertParams params = params_from_json(j.at("params"));
  if (!params.is_split()) throw UsageError("split plan: params must have exactly one initial code");
  SplitPlan plan{params, spec_from_json(j.at("initial_codes").at(0)), {}, {}, {}, {}, {}, {}};
  for (const auto& c : j.at("final_codes")) plan.finals.push_back(spec_from_json(c));
  for (const auto& u : j.at("unchanged")) plan.unchanged.push_back(group_by_code(u, 1, "unchanged")[0]);
  if (!j.at("privileged").is_null()) {
    const auto p = j.at("privileged").get<std::size_t>();
    if (p < 1) throw UsageError("split plan: privileged index is one-based");
    plan.privileged = p - 1;
  }
  plan.extra_reads = group_by_code(j.at("V"), 1, "V")[0];
  if (j.at("matrices").contains("punctured")) {
    const auto& pun = j.at("matrices").at("punctured");
    plan.punctured_positions = group_by_code(pun.at("positions"), 1, "positions")[0];
    plan.punctured_check = matrix_json(f, pun.at("H"));
  }
  plan.check_well_formed();
  if (j.contains("read")) {
    const auto& reads = j.at("read");
    if (reads.size() != plan.finals.size()) throw UsageError("split plan: one read list per final code");
    for (std::size_t t = 0; t < plan.finals.size(); ++t) {
      IndexSet got = group_by_code(reads[t], 1, "read")[0];
      std::sort(got.begin(), got.end());
      if (got != plan.reads_for(t))
        throw UsageError("split plan: read set of final " + std::to_string(t + 1) +
                         " disagrees with U, V and the privileged index");
    }
  }
  return plan;
}

json general_to_json(const GeneralPlan& plan) {
  const std::size_t t1 = plan.initial.size();
  json j;
  j["kind"] = "general";
  j["field"] = field_to_json(plan.field);
  j["params"] = params_to_json(plan.params());
  j["initial_codes"] = json::array();
  for (const auto& c : plan.initial) j["initial_codes"].push_back(spec_to_json(c));
  for (const char* key : {"unchanged", "read", "written", "layout", "sigma"}) j[key] = json::array();
  for (std::size_t t = 0; t < plan.finals.size(); ++t) {
    const GeneralFinal& fin = plan.finals[t];
    j["unchanged"].push_back(grouped_pairs(fin.unchanged));
    j["read"].push_back(grouped_pairs(fin.read));
    json w = json::array();
    for (std::size_t p = 0; p < fin.written_count(); ++p) w.push_back({t1 + t + 1, p + 1});
    j["written"].push_back(w);
    json layout = json::array();
    for (const auto& id : fin.layout) layout.push_back({id.code + 1, id.position + 1});
    j["layout"].push_back(layout);
    j["sigma"].push_back(to_lines(fin.sigma));
  }
  return j;
}

GeneralPlan general_from_json(const json& j) {
  const Field f = field_from_json(j.at("field"));
  const ConvertParams params = params_from_json(j.at("params"));
  GeneralPlan plan{f, {}, {}};
  for (const auto& c : j.at("initial_codes")) plan.initial.push_back(spec_from_json(c));
  const std::size_t t1 = plan.initial.size();
  if (t1 != params.t1()) throw UsageError("general plan: initial_codes disagrees with params");
  for (std::size_t t = 0; t < params.t2(); ++t) {
    GeneralFinal fin{params.final[t],
                     group_by_code(j.at("unchanged").at(t), t1, "unchanged"),
                     group_by_code(j.at("read").at(t), t1, "read"),
                     {},
                     matrix_json(f, j.at("sigma").at(t))};
    for (const auto& id : j.at("layout").at(t)) fin.layout.push_back(pair_from_json(id));
    plan.finals.push_back(std::move(fin));
  }
  for (std::size_t i = 0; i < t1; ++i)
    if (plan.initial[i].n != params.initial[i].n || plan.initial[i].k() != params.initial[i].k)
      throw UsageError("general plan: initial code " + std::to_string(i + 1) + " disagrees with params");
  plan.check_well_formed();
  return plan;
}

}  // namespace

json field_to_json(const Field& field) {
  const FieldSpec& s = field.spec();
  json j = {{"q", field.order()}, {"p", s.characteristic}, {"m", s.degree}};
  if (s.degree > 1) j["modulus"] = s.modulus;
  return j;
}

Field field_from_json(const json& j) {
  try {
    if (j.contains("p") && j.contains("m")) {
      FieldSpec s{j.at("p").get<std::uint32_t>(), j.at("m").get<unsigned>(), 0};
      if (s.degree > 1) s.modulus = j.value("modulus", Field::pinned_modulus(s.degree));
      Field f = Field::from_spec(s);
      if (j.contains("q") && j.at("q").get<std::uint64_t>() != f.order())
        throw UsageError("field: q does not equal p^m");
      return f;
    }
    return Field::of_order(j.at("q").get<std::uint64_t>());
  } catch (const json::exception& e) {
    throw UsageError(std::string("field: ") + e.what());
  }
}

json spec_to_json(const ExtGrsSpec& spec) {
  json j = field_to_json(spec.field);
  j["n"] = spec.n;
  j["r"] = spec.r;
  j["gamma"] = spec.gamma;
  j["w"] = spec.w;
  return j;
}

ExtGrsSpec spec_from_json(const json& j) {
  try {
    return ExtGrsSpec::make(field_from_json(j), j.at("n").get<std::size_t>(), j.at("r").get<std::size_t>(),
                            j.at("gamma").get<Word>(), j.at("w").get<Word>());
  } catch (const json::exception& e) {
    throw UsageError(std::string("code spec: ") + e.what());
  }
}

json params_to_json(const ConvertParams& params) {
  auto list = [](const std::vector<CodeParams>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back({{"n", c.n}, {"k", c.k}});
    return out;
  };
  return {{"t1", params.t1()}, {"t2", params.t2()}, {"initial", list(params.initial)}, {"final", list(params.final)}};
}

ConvertParams params_from_json(const json& j) {
  try {
    auto list = [](const json& v) {
      std::vector<CodeParams> out;
      for (const auto& c : v) out.push_back({c.at("n").get<std::size_t>(), c.at("k").get<std::size_t>()});
      return out;
    };
    ConvertParams p{list(j.at("initial")), list(j.at("final"))};
    if (j.contains("t1") && j.at("t1").get<std::size_t>() != p.t1()) throw UsageError("params: t1 mismatch");
    if (j.contains("t2") && j.at("t2").get<std::size_t>() != p.t2()) throw UsageError("params: t2 mismatch");
    p.validate();
    return p;
  } catch (const json::exception& e) {
    throw UsageError(std::string("params: ") + e.what());
  }
}

json plan_to_json(const Plan& plan) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, MergePlan>) return merge_to_json(p);
        else if constexpr (std::is_same_v<T, SplitPlan>) return split_to_json(p);
        else return general_to_json(p);
      },
      plan);
}

Plan plan_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "merge") return merge_from_json(j);
    if (kind == "split") return split_from_json(j);
    if (kind == "general") return general_from_json(j);
    throw UsageError("plan: unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw UsageError(std::string("plan: ") + e.what());
  }
}

json report_to_json(const AccessReport& report, bool include_trace) {
  json j;
  j["rho_r"] = report.rho_r;
  j["rho_w"] = report.rho_w;
  j["rho"] = report.rho;
  j["per_initial_reads"] = report.per_initial_reads;
  j["bound"] = report.bound ? json(*report.bound) : json(nullptr);
  j["read_bound"] = report.read_bound ? json(*report.read_bound) : json(nullptr);
  j["optimal"] = report.optimal ? json(*report.optimal) : json(nullptr);
  j["stable"] = report.stable ? json(*report.stable) : json(nullptr);
  if (include_trace) {
    j["trace"] = json::array();
    for (const auto& e : report.trace) {
      json t = {{"symbol", {e.symbol.code + 1, e.symbol.position + 1}},
                {"role", role_name(e.role)},
                {"read", e.read}};
      t["final"] = e.final_code ? json(*e.final_code + 1) : json(nullptr);
      j["trace"].push_back(t);
    }
  }
  return j;
}

std::string trace_table(const AccessReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "symbol" << std::setw(11) << "role" << std::setw(6) << "read"
      << "final\n";
  for (const auto& e : report.trace) {
    const std::string id = "(" + std::to_string(e.symbol.code + 1) + "," + std::to_string(e.symbol.position + 1) + ")";
    out << std::setw(10) << id << std::setw(11) << role_name(e.role) << std::setw(6) << (e.read ? "yes" : "no")
        << (e.final_code ? std::to_string(*e.final_code + 1) : "-") << "\n";
  }
  return out.str();
}

ScenarioConfig config_from_json(const json& j) {
  try {
    ScenarioConfig cfg;
    const std::string regime = j.at("regime").get<std::string>();
    if (j.contains("q") && !j.at("q").is_null()) cfg.q = j.at("q").get<std::uint64_t>();
    auto code = [](const json& c) { return CodeParams{c.at("n").get<std::size_t>(), c.at("k").get<std::size_t>()}; };
    if (regime == "merge") {
      cfg.regime = ScenarioConfig::Regime::merge;
      std::vector<CodeParams> initial;
      for (const auto& c : j.at("initial")) initial.push_back(code(c));
      if (j.contains("r_final")) {
        cfg.params = ConvertParams::merge(std::move(initial), j.at("r_final").get<std::size_t>());
      } else {
        cfg.params = ConvertParams{std::move(initial), {code(j.at("final").at(0))}};
        if (j.at("final").size() != 1) throw UsageError("merge config: exactly one final code");
        cfg.params.validate();
      }
      if (cfg.params.t1() < 2) throw UsageError("merge config: need at least two initial codes");
    } else if (regime == "split") {
      cfg.regime = ScenarioConfig::Regime::split;
      const json& init = j.at("initial").is_array() ? j.at("initial").at(0) : j.at("initial");
      std::vector<CodeParams> finals;
      for (const auto& c : j.at("final")) finals.push_back(code(c));
      cfg.params = ConvertParams::split(code(init), std::move(finals));
    } else {
      throw UsageError("config: regime must be 'merge' or 'split'");
    }
    return cfg;
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
}

std::uint64_t required_order(const ScenarioConfig& config) {
  const ConvertParams& p = config.params;
  std::size_t longest = 0;
  if (config.regime == ScenarioConfig::Regime::merge) {
    for (const auto& c : p.initial) longest = std::max(longest, c.n);
    longest = std::max(longest, p.final.front().n);
  } else {
    const auto privileged = privileged_final(p);
    longest = p.initial.front().n;
    for (std::size_t t = 0; t < p.t2(); ++t)
      if (t != privileged) longest = std::max(longest, p.final[t].n);
  }
  return longest - 1;
}

std::vector<Word> read_words(std::istream& in, const Field& field) {
  std::vector<Word> out;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Word w;
    std::string tok;
    while (ls >> tok) {
      std::uint64_t v = 0;
      std::size_t used = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.front() == '-')
        throw UsageError("line " + std::to_string(lineno) + ": '" + tok + "' is not a symbol");
      if (!field.contains(v))
        throw UsageError("line " + std::to_string(lineno) + ": symbol " + tok + " >= q = " +
                         std::to_string(field.order()));
      w.push_back(static_cast<Symbol>(v));
    }
    out.push_back(std::move(w));
  }
  return out;
}

void write_words(std::ostream& out, const std::vector<Word>& words) {
  for (const auto& w : words) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    out << "\n";
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << contents;
}

}  // namespace convcode::io

// convcode: build, run and check convertible-code plans from the shell.
//
// Exit codes: 0 ok, 1 usage/config, 2 parameter/feasibility (including a
// failed verify), 3 data corruption.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "convcode/convert.hpp"
#include "convcode/errors.hpp"
#include "convcode/io.hpp"
#include "convcode/oracle.hpp"

namespace {

using namespace convcode;
using io::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kParameter = 2;
constexpr int kCorruption = 3;

std::string set_text(const std::vector<std::size_t>& zero_based) {
  std::string out = "{";
  for (std::size_t i = 0; i < zero_based.size(); ++i)
    out += (i ? ", " : "") + std::to_string(zero_based[i] + 1);
  return out + "}";
}

std::vector<Word> read_words_file(const std::string& path, const Field& field) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return io::read_words(in, field);
}

void write_words_file(const std::string& path, const std::vector<Word>& words) {
  std::ostringstream out;
  io::write_words(out, words);
  io::write_text_file(path, out.str());
}

const Field& plan_field(const io::Plan& plan) {
  return std::visit(
      [](const auto& p) -> const Field& {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GeneralPlan>) return p.field;
        else return p.field();
      },
      plan);
}

std::vector<ExtGrsSpec> initial_codes(const io::Plan& plan) {
  if (const auto* s = std::get_if<SplitPlan>(&plan)) return {s->initial};
  if (const auto* m = std::get_if<MergePlan>(&plan)) return m->initial;
  return std::get<GeneralPlan>(plan).initial;
}

// ---------------------------------------------------------------------------

int cmd_plan(const std::string& config_path, const std::string& out_path) {
  const io::ScenarioConfig cfg = io::config_from_json(io::read_json_file(config_path));
  const std::uint64_t need = io::required_order(cfg);
  std::uint64_t q = 0;
  if (cfg.q) {
    if (!Field::is_supported_order(*cfg.q)) throw UsageError("unsupported field order q = " + std::to_string(*cfg.q));
    if (*cfg.q < need)
      throw ParameterError("field too small for these parameters, have q = " + std::to_string(*cfg.q), need);
    q = *cfg.q;
  } else {
    q = Field::smallest_supported_order(std::max<std::uint64_t>(need, 2));
  }
  const Field field = Field::of_order(q);

  std::optional<io::Plan> plan;
  std::cout << "field: " << field.spec().describe() << (cfg.q ? "" : " (smallest supported)") << "\n";
  if (cfg.regime == io::ScenarioConfig::Regime::merge) {
    MergePlan m = build_merge(cfg.params, field);
    const MergeBound b = merge_lower_bound(cfg.params);
    std::cout << "regime: merge, t1 = " << cfg.params.t1() << "\n";
    std::cout << "S = " << set_text(m.s) << "\n";
    std::cout << "per-code read minimums:";
    for (std::size_t r : b.per_code_reads) std::cout << " " << r;
    std::cout << "\nread bound ρ_r = " << b.read << "\n";
    std::cout << "write bound ρ_w = " << b.write << "\n";
    std::cout << "bound ρ = " << b.total << "\n";
    plan = std::move(m);
  } else {
    SplitPlan s = build_split(cfg.params, field);
    const SplitBound b = split_lower_bound(cfg.params);
    std::cout << "regime: split, t2 = " << cfg.params.t2() << "\n";
    std::cout << "feasible = " << set_text(split_feasible(cfg.params)) << "\n";
    std::cout << "j* = " << (s.privileged ? std::to_string(*s.privileged + 1) : std::string("none")) << "\n";
    std::cout << "read bound ρ_r = " << b.read << "\n";
    std::cout << "write bound ρ_w = " << b.write << "\n";
    std::cout << "bound ρ = " << b.total << "\n";
    plan = std::move(s);
  }
  if (auto label = corollary_label(cfg.params)) std::cout << "special case: " << *label << "\n";
  io::write_text_file(out_path, io::plan_to_json(*plan).dump(2) + "\n");
  std::cout << "wrote " << out_path << "\n";
  return kOk;
}

int cmd_encode(const std::string& plan_path, const std::string& in_path, const std::string& out_path) {
  const io::Plan plan = io::plan_from_json(io::read_json_file(plan_path));
  const auto codes = initial_codes(plan);
  const std::vector<Word> messages = read_words_file(in_path, plan_field(plan));
  if (!messages.empty() && messages.size() != codes.size())
    throw UsageError("expected " + std::to_string(codes.size()) + " messages, got " +
                     std::to_string(messages.size()));
  std::vector<Word> out;
  for (std::size_t i = 0; i < messages.size(); ++i) {
    if (messages[i].size() != codes[i].k())
      throw UsageError("message " + std::to_string(i + 1) + " has length " + std::to_string(messages[i].size()) +
                       ", code " + std::to_string(i + 1) + " has k = " + std::to_string(codes[i].k()));
    out.push_back(encode(codes[i], messages[i]));
  }
  write_words_file(out_path, out);
  return kOk;
}

int cmd_convert(const std::string& plan_path, const std::string& in_path, const std::string& out_path,
                const std::string& report_path, bool trace) {
  const io::Plan plan = io::plan_from_json(io::read_json_file(plan_path));
  const std::vector<Word> inputs = read_words_file(in_path, plan_field(plan));
  const auto codes = initial_codes(plan);
  if (inputs.size() != codes.size())
    throw UsageError("expected " + std::to_string(codes.size()) + " codewords, got " +
                     std::to_string(inputs.size()));
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (inputs[i].size() != codes[i].n)
      throw UsageError("codeword " + std::to_string(i + 1) + " has length " + std::to_string(inputs[i].size()) +
                       ", expected n = " + std::to_string(codes[i].n));

  std::vector<Word> finals;
  AccessReport report;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, MergePlan>) {
          auto r = merge_convert(p, inputs);
          finals = {std::move(r.final_word)};
          report = std::move(r.report);
        } else if constexpr (std::is_same_v<T, SplitPlan>) {
          auto r = split_convert(p, inputs.front());
          finals = std::move(r.final_words);
          report = std::move(r.report);
        } else {
          auto r = general_convert(p, inputs);
          finals = std::move(r.final_words);
          report = std::move(r.report);
        }
      },
      plan);
  write_words_file(out_path, finals);

  const std::string doc = io::report_to_json(report, trace).dump(2) + "\n";
  if (!report_path.empty())
    io::write_text_file(report_path, doc);
  else
    std::cout << doc;
  if (trace) std::cout << io::trace_table(report);
  return kOk;
}

// MDS check for one parity-check matrix: exhaustive inside the oracle guard,
// random column subsets otherwise.
bool mds_check(const Matrix& h, std::mt19937_64& rng) {
  if (h.cols() <= oracle::kMaxMdsLength) return oracle::mds_exhaustive(h);
  IndexSet all(h.cols());
  std::iota(all.begin(), all.end(), 0);
  for (int trial = 0; trial < 200; ++trial) {
    std::shuffle(all.begin(), all.end(), rng);
    IndexSet pick(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(h.rows()));
    std::sort(pick.begin(), pick.end());
    if (rank(submatrix_cols(h, pick)) != h.rows()) return false;
  }
  return true;
}

Word random_word(const Field& f, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  Word w(len);
  for (auto& s : w) s = d(rng);
  return w;
}

int cmd_verify(const std::string& plan_path, std::uint64_t seed) {
  const io::Plan plan = io::plan_from_json(io::read_json_file(plan_path));
  std::mt19937_64 rng(seed);
  int failures = 0;
  auto check = [&](bool ok, const std::string& what, const std::string& diag = {}) {
    std::cout << (ok ? "PASS " : "FAIL ") << what;
    if (!ok && !diag.empty()) std::cout << ": " << diag;
    std::cout << "\n";
    if (!ok) ++failures;
  };

  const auto inits = initial_codes(plan);
  for (std::size_t i = 0; i < inits.size(); ++i)
    check(mds_check(parity_check(inits[i]), rng), "initial code " + std::to_string(i + 1) + " is MDS");

  std::vector<ExtGrsSpec> finals;
  StructureCheck structure;
  if (const auto* m = std::get_if<MergePlan>(&plan)) {
    finals = {m->final_code};
    structure = verify_optimal_structure(*m);
  } else if (const auto* s = std::get_if<SplitPlan>(&plan)) {
    finals = s->finals;
    structure = verify_split_structure(*s);
  } else {
    structure = verify_general_structure(std::get<GeneralPlan>(plan));
  }
  for (std::size_t j = 0; j < finals.size(); ++j)
    check(mds_check(parity_check(finals[j]), rng), "final code " + std::to_string(j + 1) + " is MDS");
  check(structure.ok, "plan structure", structure.diagnostic);
  if (!structure.ok) return kParameter;

  // Invariants on random inputs: outputs are final codewords and keep the
  // unchanged symbols in place.
  const Field& field = plan_field(plan);
  bool codewords_ok = true;
  bool unchanged_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Word> inputs;
    for (const auto& c : inits) inputs.push_back(encode(c, random_word(field, c.k(), rng)));
    std::vector<Word> outs;
    if (const auto* m = std::get_if<MergePlan>(&plan)) {
      outs = {merge_convert(*m, inputs).final_word};
      std::size_t at = 0;
      for (std::size_t i = 0; i < m->unchanged.size(); ++i)
        for (std::size_t p : m->unchanged[i]) unchanged_ok &= outs[0][at++] == inputs[i][p];
    } else if (const auto* s = std::get_if<SplitPlan>(&plan)) {
      outs = split_convert(*s, inputs.front()).final_words;
      for (std::size_t j = 0; j < outs.size(); ++j)
        for (std::size_t a = 0; a < s->unchanged[j].size(); ++a)
          unchanged_ok &= outs[j][a] == inputs.front()[s->unchanged[j][a]];
    } else {
      const auto& g = std::get<GeneralPlan>(plan);
      outs = general_convert(g, inputs).final_words;
      for (std::size_t j = 0; j < outs.size(); ++j)
        for (std::size_t a = 0; a < g.finals[j].layout.size(); ++a) {
          const SymbolId id = g.finals[j].layout[a];
          if (id.code < inputs.size()) unchanged_ok &= outs[j][a] == inputs[id.code][id.position];
        }
    }
    for (std::size_t j = 0; j < finals.size(); ++j) codewords_ok &= is_codeword(finals[j], outs[j]);
  }
  if (!finals.empty()) check(codewords_ok, "conversion outputs are final codewords (20 random inputs)");
  check(unchanged_ok, "unchanged symbols stay in place (20 random inputs)");

  const AccessReport report = std::visit([](const auto& p) { return access_report(p); }, plan);
  std::cout << "ρ_r = " << report.rho_r << ", ρ_w = " << report.rho_w << ", ρ = " << report.rho;
  if (report.bound) std::cout << ", bound = " << *report.bound;
  std::cout << "\n";
  if (report.optimal) check(*report.optimal, "access cost meets the lower bound");

  std::cout << (failures ? "verify: FAILED (" + std::to_string(failures) + ")" : std::string("verify: ok")) << "\n";
  return failures ? kParameter : kOk;
}

CodeParams parse_nk(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("expected n:k, got '" + text + "'");
  try {
    std::size_t used = 0;
    const auto n = std::stoull(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const auto k = std::stoull(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument(text);
    return {n, k};
  } catch (const std::logic_error&) {
    throw UsageError("expected n:k, got '" + text + "'");
  }
}

int cmd_bounds(const std::vector<std::string>& initial, const std::vector<std::string>& final_codes,
               std::optional<std::size_t> r_final) {
  std::vector<CodeParams> init;
  for (const auto& s : initial) init.push_back(parse_nk(s));
  ConvertParams params;
  if (r_final) {
    if (!final_codes.empty()) throw UsageError("give either --final or --r-final, not both");
    params = ConvertParams::merge(std::move(init), *r_final);
  } else {
    params.initial = std::move(init);
    for (const auto& s : final_codes) params.final.push_back(parse_nk(s));
    params.validate();
  }

  std::cout << "initial:";
  for (const auto& c : params.initial) std::cout << " [" << c.n << "," << c.k << "]";
  std::cout << "\nfinal:";
  for (const auto& c : params.final) std::cout << " [" << c.n << "," << c.k << "]";
  std::cout << "\n";
  if (params.is_merge()) {
    const MergeBound b = merge_lower_bound(params);
    std::cout << "regime: merge\nS = " << set_text(classify_s(params)) << "\n";
    std::cout << "code  k  r  min reads\n";
    for (std::size_t i = 0; i < params.t1(); ++i)
      std::cout << std::setw(4) << i + 1 << std::setw(3) << params.initial[i].k << std::setw(3)
                << params.initial[i].r() << std::setw(11) << b.per_code_reads[i] << "\n";
    std::cout << "read bound ρ_r = " << b.read << "\nwrite bound ρ_w = " << b.write << "\nbound ρ = " << b.total
              << "\n";
  } else if (params.is_split()) {
    const SplitBound b = split_lower_bound(params);
    const auto feasible = split_feasible(params);
    const auto js = privileged_final(params);
    std::cout << "regime: split\nfeasible = " << set_text(feasible) << "\n";
    std::cout << "j* = " << (js ? std::to_string(*js + 1) : std::string("none")) << "\n";
    std::cout << "read bound ρ_r = " << b.read << "\nwrite bound ρ_w = " << b.write << "\nbound ρ = " << b.total
              << "\n";
  } else {
    throw UsageError("bounds are defined for t1 = 1 or t2 = 1");
  }
  const auto label = corollary_label(params);
  std::cout << "special case: " << (label ? *label : std::string("none")) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convertible MDS codes: plans, conversion and access-cost bounds"};
  app.require_subcommand(1);

  std::string config, plan_path, in, out, report;
  std::uint64_t seed = 0;
  bool trace = false;
  std::vector<std::string> initial, final_codes;
  std::optional<std::size_t> r_final;

  auto* plan = app.add_subcommand("plan", "build a plan from a scenario config");
  plan->add_option("--config", config, "scenario config (JSON)")->required();
  plan->add_option("--out", out, "plan document to write")->required();

  auto* enc = app.add_subcommand("encode", "encode one message per initial code");
  enc->add_option("--plan", plan_path)->required();
  enc->add_option("--in", in, "message file, one message per line")->required();
  enc->add_option("--out", out, "codeword file")->required();

  auto* conv = app.add_subcommand("convert", "convert initial codewords to final codewords");
  conv->add_option("--plan", plan_path)->required();
  conv->add_option("--in", in, "initial codewords, one per line")->required();
  conv->add_option("--out", out, "final codewords")->required();
  conv->add_option("--report", report, "write the report here instead of stdout");
  conv->add_flag("--trace", trace, "include the device trace table");

  auto* ver = app.add_subcommand("verify", "check MDS property, plan structure and invariants");
  ver->add_option("--plan", plan_path)->required();
  ver->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();

  auto* bnd = app.add_subcommand("bounds", "print access-cost lower bounds");
  bnd->add_option("--initial", initial, "initial code n:k (repeatable)")->required();
  bnd->add_option("--final", final_codes, "final code n:k (repeatable)");
  bnd->add_option("--r-final", r_final, "merge: redundancy of the single final code");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*plan) return cmd_plan(config, out);
    if (*enc) return cmd_encode(plan_path, in, out);
    if (*conv) return cmd_convert(plan_path, in, out, report, trace);
    if (*ver) return cmd_verify(plan_path, seed);
    if (*bnd) return cmd_bounds(initial, final_codes, r_final);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.required_order()) std::cerr << "required q ≥ " << *e.required_order() << "\n";
    return kParameter;
  } catch (const CorruptionError& e) {
    std::cerr << "corrupt input: " << e.what() << "\n";
    return kCorruption;
  } catch (const InsufficientDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParameter;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParameter;
  }
  return kUsage;
}

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "clasplab/clasplab.hpp"
#include "clasplab/json_io.hpp"
#include "clasplab/render.hpp"

using namespace clasplab;

namespace {

// Bad flag values and missing input; exit 2 like CLI11's own errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string generate;
  int n = 0;
  int strands = 0;
  std::string word;
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  int depth = 6;
  std::string out;
  std::optional<std::string> ruling;
  std::string style = "svg";
  std::optional<int> random_length;
};

std::vector<int> parse_csv(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    if (!detail::parse_int(detail::trim(item), v))
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string read_source(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

FrontDiagram generated(const Options& o) {
  if (o.generate == "unknot") return generate_unknot();
  if (o.generate == "trefoil") return generate_trefoil();
  if (o.generate == "torus4") {
    if (o.n < 0) throw UsageError("--n must be >= 0");
    return generate_torus4(o.n);
  }
  if (o.generate == "braid") {
    if (o.strands < 1) throw UsageError("braid needs --strands");
    const auto w = parse_csv(o.word, "--word");
    return generate_negative_braid_closure(o.strands, w);
  }
  throw UsageError("unknown generator '" + o.generate + "' (unknot, trefoil, torus4, braid)");
}

struct Loaded {
  FrontDiagram diagram;
  std::vector<std::size_t> lines;  // empty for generated diagrams
};

Loaded load(const Options& o, bool strict) {
  if (!o.generate.empty()) return {generated(o), {}};
  if (o.input.empty()) throw UsageError("no input: give --input <path>|- or --generate <name>");
  auto p = parse_diagram_with_lines(read_source(o.input), strict);
  return {std::move(p.diagram), std::move(p.lines)};
}

std::optional<std::uint64_t> budget(const Options& o) {
  if (o.budget) return o.budget;
  if (const char* env = std::getenv("CLASPLAB_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end == env || *end) throw UsageError("CLASPLAB_BUDGET is not a number");
    return v;
  }
  return std::nullopt;
}

std::string ruling_text(const NormalRuling& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.switches.size(); ++i) s += (i ? "," : "") + std::to_string(r.switches[i]);
  return s + "}";
}

bool text_mode(const Options& o) { return o.format == "text"; }

std::string emit(const json& j) { return j.dump() + "\n"; }

// Subcommands return (stdout text, exit code).
struct Output {
  std::string text;
  int code = 0;
};

Output cmd_validate(const Options& o) {
  auto in = load(o, false);
  auto rep = validate(in.diagram);
  Output out;
  if (text_mode(o)) {
    if (rep.ok()) out.text = "ok\n";
    for (const auto& v : rep.violations) {
      out.text += "event " + std::to_string(v.event);
      if (v.event >= 1 && v.event <= in.lines.size()) out.text += " (line " + std::to_string(in.lines[v.event - 1]) + ")";
      out.text += ": " + v.rule + ": " + v.message + "\n";
    }
  } else {
    out.text = emit(to_json(rep, in.lines));
  }
  if (!rep.ok()) {
    const auto& v = rep.violations.front();
    std::optional<std::size_t> line;
    if (v.event >= 1 && v.event <= in.lines.size()) line = in.lines[v.event - 1];
    Error e(ErrorCode::kInvalidDiagram, v.rule + ": " + v.message, line ? line : std::optional(v.event));
    json err = to_json(e);
    err["event"] = v.event;
    std::cerr << err.dump() << "\n";
    out.code = 1;
  }
  return out;
}

Output cmd_rulings(const Options& o) {
  auto d = load(o, true).diagram;
  auto rs = enumerate_rulings(d, budget(o));
  if (!text_mode(o)) return {emit(to_json(rs))};
  std::string t;
  for (const auto& r : rs) t += ruling_text(r) + "\n";
  return {t};
}

std::vector<NormalRuling> chosen_rulings(const Options& o, const FrontDiagram& d) {
  if (o.ruling) return {NormalRuling(parse_csv(*o.ruling, "--ruling"))};
  return enumerate_rulings(d, budget(o));
}

Output cmd_clasps(const Options& o) {
  auto d = load(o, true).diagram;
  json arr = json::array();
  std::string t;
  for (const auto& r : chosen_rulings(o, d)) {
    auto rep = clasp_report(d, r);
    json item = {{"ruling", to_json(r)}};
    item.update(to_json(rep));
    arr.push_back(std::move(item));
    t += ruling_text(r) + ": " + std::to_string(rep.total) + " clasps, " + parity_name(rep.parity) + "\n";
    for (const auto& p : rep.pairs)
      t += "  eyes " + std::to_string(p.eye_a) + "," + std::to_string(p.eye_b) + ": " +
           std::to_string(p.clasps) + "\n";
  }
  return {text_mode(o) ? t : emit(arr)};
}

Output cmd_parity(const Options& o) {
  auto d = load(o, true).diagram;
  int even = 0, odd = 0;
  json per = json::array();
  for (const auto& e : ruling_parities(d, budget(o))) {
    (e.parity == Parity::kEven ? even : odd)++;
    per.push_back({{"ruling", to_json(e.ruling)}, {"parity", parity_name(e.parity)}});
  }
  if (text_mode(o))
    return {std::to_string(even + odd) + " rulings: " + std::to_string(even) + " even, " +
            std::to_string(odd) + " odd\n"};
  return {emit({{"rulings", even + odd}, {"even", even}, {"odd", odd}, {"parities", per}})};
}

Output cmd_obstruct(const Options& o) {
  auto d = load(o, true).diagram;
  auto v = obstruction_verdict(d, budget(o));
  if (!text_mode(o)) return {emit(to_json(v))};
  std::string t = std::string(verdict_name(v.verdict)) + " (" + v.note + ")\n";
  for (const auto& e : v.evidence)
    t += "  " + ruling_text(e.ruling) + ": " + std::to_string(e.clasps) + " clasps, " + parity_name(e.parity) + "\n";
  return {t};
}

Output cmd_apply_script(const Options& o) {
  MoveScript script;
  if (o.random_length) {
    if (!o.input.empty()) throw UsageError("--random and --input are exclusive");
    if (*o.random_length < 0) throw UsageError("--random must be >= 0");
    script = random_script(*o.random_length, o.seed);
  } else {
    if (o.input.empty()) throw UsageError("no script: give --input <path>|- or --random N");
    script = parse_script(read_source(o.input));
  }
  auto cert = run_script(script);
  if (!text_mode(o)) return {emit(to_json(cert))};
  std::string t = "# script\n" + serialize_script(cert.script) + "# diagram\n" + serialize_diagram(cert.diagram);
  t += "# associated ruling " + ruling_text(cert.ruling) + ": " + std::to_string(cert.clasps.total) +
       " clasps, " + parity_name(cert.clasps.parity) + "\n";
  return {t};
}

Output cmd_search(const Options& o) {
  auto d = load(o, true).diagram;
  if (o.depth < 0) throw UsageError("--depth must be >= 0");
  auto res = search_filling(d, o.depth, budget(o).value_or(200000));
  if (!text_mode(o)) return {emit(to_json(res))};
  std::string t = std::string(search_status_name(res.status));
  if (!res.note.empty()) t += " (" + res.note + ")";
  t += "\n";
  if (res.script) t += serialize_script(*res.script);
  return {t};
}

Output cmd_generate(const Options& o) {
  if (o.generate.empty()) throw UsageError("generate needs --generate <name>");
  auto d = generated(o);
  return {text_mode(o) ? serialize_diagram(d) : emit(to_json(d))};
}

Output cmd_render(const Options& o) {
  auto d = load(o, true).diagram;
  std::optional<NormalRuling> r;
  if (o.ruling) r = NormalRuling(parse_csv(*o.ruling, "--ruling"));
  if (o.style == "ascii") return {render_ascii(d, r)};
  return {render_svg(d, r)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clasplab: Legendrian fronts, normal rulings, clasps and filling obstructions"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool diagram_input) {
    auto* in = sub->add_option("--input", o.input, diagram_input ? "front file, or - for stdin" : "move script, or - for stdin");
    if (diagram_input) {
      auto* gen = sub->add_option("--generate", o.generate, "unknot | trefoil | torus4 | braid");
      in->excludes(gen);
      sub->add_option("--n", o.n, "torus4 parameter");
      sub->add_option("--strands", o.strands, "braid strand count");
      sub->add_option("--word", o.word, "braid word, comma separated");
    }
    sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", o.budget, "node budget (default: CLASPLAB_BUDGET)");
    sub->add_option("--out", o.out, "write output here instead of stdout");
  };

  struct Entry {
    CLI::App* app;
    Output (*run)(const Options&);
  };
  std::vector<Entry> subs;
  auto add = [&](const char* name, const char* help, Output (*run)(const Options&), bool diagram_input = true) {
    auto* s = app.add_subcommand(name, help);
    add_common(s, diagram_input);
    subs.push_back({s, run});
    return s;
  };
  add("validate", "check the event word invariants", cmd_validate);
  add("rulings", "enumerate normal rulings", cmd_rulings);
  add("clasps", "clasp report per ruling", cmd_clasps)->add_option("--ruling", o.ruling, "switch set, comma separated");
  add("parity", "even and odd ruling counts", cmd_parity);
  add("obstruct", "decide the even-ruling obstruction", cmd_obstruct);
  auto* script = add("apply-script", "run a filling script from the empty diagram", cmd_apply_script, false);
  script->add_option("--random", o.random_length, "generate a random script of this length");
  script->add_option("--seed", o.seed, "seed for --random");
  auto* search = add("search", "bounded search for a decomposable filling", cmd_search);
  search->add_option("--depth", o.depth, "depth bound");
  search->add_option("--seed", o.seed, "accepted for uniformity; the search is deterministic");
  add("generate", "print a generated diagram", cmd_generate);
  auto* render = add("render", "SVG or ASCII picture of the front", cmd_render);
  render->add_option("--style", o.style)->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("--ruling", o.ruling, "switch set, comma separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& s : subs) {
    if (!s.app->parsed()) continue;
    try {
      Output out = s.run(o);
      if (o.out.empty()) {
        std::cout << out.text;
      } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + o.out + "'");
        f << out.text;
      }
      return out.code;
    } catch (const UsageError& e) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      std::cerr << to_json(e).dump() << "\n";
      return 1;
    }
  }
  return 2;
}

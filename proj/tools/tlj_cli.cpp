// tlj: command-line front end for the diagram calculus and its invariants.
//
// Exit codes: 0 success, 2 malformed input, 3 mathematical obstruction
// (ChebyshevRoot, NonModular, ...), 4 resource limit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tlj/annular.hpp"
#include "tlj/braid.hpp"
#include "tlj/jones_wenzl.hpp"
#include "tlj/manifold.hpp"
#include "tlj/modular.hpp"

using nlohmann::json;
using namespace tlj;

namespace {

struct RunConfig {
  std::string subcommand;
  int r = 0;
  std::string root_class = "4r";
  int embed = 1;
  std::string d;
  int max_strands = 14;
  long max_expansions = 100000;
  std::string format = "json";
};

json approx_json(const Scalar& s) {
  if (!s.has_approx()) return nullptr;
  auto z = s.approx();
  return json::array({z.real(), z.imag()});
}

json poly_json(const SPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json context_json(const RunConfig& cfg) {
  if (cfg.r) return {{"r", cfg.r}, {"class", cfg.root_class}, {"embed", cfg.embed}};
  if (!cfg.d.empty()) return {{"d", cfg.d}};
  return "generic";
}

ContextPtr make_context(const RunConfig& cfg, bool needs_a) {
  if (cfg.r) {
    if (!cfg.d.empty()) throw InvalidParameters("--r and --d are mutually exclusive");
    return SkeinContext::at_root(root_order(cfg.r, parse_root_class(cfg.root_class)), cfg.embed);
  }
  if (!cfg.d.empty()) {
    if (needs_a) throw InvalidParameters("braid evaluation needs A; give --r instead of --d");
    mpq_class q;
    if (q.set_str(cfg.d, 10) != 0) throw ParseError("--d expects a rational such as 7/3, got '" + cfg.d + "'");
    q.canonicalize();
    if (q == 0) throw ParseError("--d must be nonzero");
    return SkeinContext::with_loop_value(Scalar(q));
  }
  return SkeinContext::generic();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void check_strands(int n, const RunConfig& cfg) {
  if (n > cfg.max_strands) {
    throw ResourceLimit(std::to_string(n) + " strands exceeds --max-strands " + std::to_string(cfg.max_strands));
  }
}

struct BraidInput {
  int strands = -1;
  std::string word;
  std::string link;
};

ColoredFramedLink load_link(const BraidInput& in) {
  if (!in.link.empty()) {
    try {
      return link_from_json(read_json_file(in.link));
    } catch (const json::exception& e) {
      throw ParseError(in.link + ": " + e.what());
    }
  }
  if (in.strands < 0) throw ParseError("give --strands and --word, or --link");
  ColoredFramedLink l;
  l.braid = parse_braid(in.strands, in.word);
  return l;
}

json braid_json(const BraidWord& b) { return {{"strands", b.strands}, {"word", b.word}, {"writhe", writhe(b)}}; }

json cmd_bracket(const RunConfig& cfg, const BraidInput& in, bool bracket, bool jones) {
  ColoredFramedLink link = load_link(in);
  check_strands(link.braid.strands, cfg);
  auto ctx = make_context(cfg, true);
  json out = {{"braid", braid_json(link.braid)}, {"context", context_json(cfg)}};
  if (bracket && !in.link.empty()) {
    validate(link);
    out["colored_bracket"] = to_json(colored_bracket(link, *ctx));
  } else if (bracket) {
    out["bracket"] = to_json(bracket_closure(link.braid, *ctx));
  }
  if (jones) out["jones"] = to_json(jones_polynomial(link.braid, *ctx));
  return out;
}

json cmd_modular(const RunConfig& cfg, const std::vector<std::string>& verlinde_requests) {
  if (!cfg.r) throw ParseError("modular-data needs --r");
  ModularData md = build_modular_data(cfg.r, parse_root_class(cfg.root_class), cfg.embed);
  json out;
  out["r"] = md.r;
  out["class"] = root_class_name(md.root_class);
  out["order"] = md.order;
  out["embedding"] = md.embedding;
  out["labels"] = md.labels;
  out["rank"] = s_matrix_rank(md).rank;
  out["modular"] = md.modular;
  json dims = json::array(), twists = json::array();
  for (const auto& x : md.dims) dims.push_back(to_json(x));
  for (const auto& x : md.twists) twists.push_back(to_json(x));
  out["dims"] = dims;
  out["twists"] = twists;
  json exact = json::array(), approx = json::array();
  for (int i = 0; i < md.s_tilde.rows(); ++i) {
    json er = json::array(), ar = json::array();
    for (int j = 0; j < md.s_tilde.cols(); ++j) {
      er.push_back(to_json(md.s_tilde(i, j)));
      ar.push_back(approx_json(md.s_tilde(i, j)));
    }
    exact.push_back(er);
    approx.push_back(ar);
  }
  out["s_tilde"] = {{"exact", exact}, {"approx", approx}};
  out["d_squared"] = to_json(md.d_squared);
  out["p_plus"] = to_json(md.p_plus);
  out["p_minus"] = to_json(md.p_minus);
  out["fusion"] = md.modular ? json(fusion_tensor(md)) : json(nullptr);
  json table = json::array();
  for (const auto& req : verlinde_requests) {
    // "g" or "g:a,b,c"
    const auto colon = req.find(':');
    int g = 0;
    std::vector<int> labels;
    try {
      std::size_t used = 0;
      g = std::stoi(req.substr(0, colon), &used);
      if (used != (colon == std::string::npos ? req.size() : colon)) throw std::invalid_argument(req);
      if (colon != std::string::npos) {
        std::stringstream ss(req.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) labels.push_back(std::stoi(tok));
      }
    } catch (const std::logic_error&) {
      throw ParseError("--verlinde expects g or g:a,b,..., got '" + req + "'");
    }
    table.push_back({{"genus", g}, {"labels", labels}, {"dim", verlinde_dim(md, g, labels)}});
  }
  out["verlinde"] = table;
  return out;
}

json cmd_rt(const RunConfig& cfg, const std::string& path, bool doubled) {
  if (!cfg.r) throw ParseError("rt needs --r");
  if (path.empty()) throw ParseError("rt needs --link");
  BraidInput in;
  in.link = path;
  SurgeryPresentation s;
  s.link = load_link(in);
  check_strands(s.link.braid.strands, cfg);
  s.framing_matrix = linking_matrix(s.link);
  ModularData md = with_total_dimension(build_modular_data(cfg.r, parse_root_class(cfg.root_class), cfg.embed));
  if (!md.modular) throw NonModular("rt needs the 4r class");
  // the surgery colour sums over every label on every component
  double vectors = 1;
  for (std::size_t c = 0; c < s.link.components.size(); ++c) vectors *= md.rank();
  if (vectors > static_cast<double>(cfg.max_expansions)) {
    throw ResourceLimit("surgery colouring needs more than --max-expansions label vectors");
  }
  RTResult z = rt_invariant(s, md);
  json out;
  out["sigma"] = z.sigma;
  out["components"] = z.components;
  out["linking_matrix"] = s.framing_matrix;
  out["bracket_exact"] = to_json(z.bracket);
  out["Z_exact"] = to_json(z.z);
  out["Z_approx"] = json::array({z.z_approx.real(), z.z_approx.imag()});
  if (doubled) out["Z_doubled_approx"] = doubled_invariant(s, md).approx().real();
  return out;
}

json cmd_annular(const std::string& level_s, const std::string& sign) {
  int level = 0;
  try {
    level = std::stoi(level_s);
  } catch (const std::logic_error&) {
    throw ParseError("--level expects an integer");
  }
  if (sign != "plus" && sign != "minus") throw ParseError("--d expects plus or minus");
  const Scalar d = level_loop_value(level, sign == "plus");
  LevelTable t = level_tables(level, d);
  json out;
  out["level"] = level;
  out["d"] = to_json(t.d);
  json grades = json::array();
  for (const auto& g : t.grades) {
    json gj;
    gj["grade"] = g.grade;
    gj["source"] = g.source;
    gj["count"] = g.count;
    gj["bound"] = g.bound;
    if (!g.idempotents.empty()) {
      gj["relation"] = poly_json(g.relation);
      json roots = json::array(), ids = json::array();
      for (const auto& r : g.roots) roots.push_back(to_json(r));
      for (const auto& e : g.idempotents) ids.push_back(poly_json(e));
      gj["roots"] = roots;
      gj["idempotents"] = ids;
      gj["check"] = {{"idempotent", g.check.idempotent}, {"orthogonal", g.check.orthogonal}, {"complete", g.check.complete}};
    }
    if (level == 2 && g.grade == 2) {
      json e = json::object();
      for (bool plus : {true, false}) {
        json cs = json::array();
        for (const auto& c : level2_grade2_idempotent(plus, t.d)) cs.push_back(to_json(c));
        e[plus ? "e_plus" : "e_minus"] = cs;
      }
      e["basis"] = {"1_2", "T", "B'bar B", "Bbar B", "B B'", "B'bar B'", "Bbar R B", "B'bar R B"};
      gj["closed_form"] = e;
    }
    grades.push_back(gj);
  }
  out["grades"] = grades;
  out["trivial_label"] = t.trivial_label;
  json disk = json::array();
  for (const auto& v : t.disk_values) disk.push_back(to_json(v));
  out["disk_values"] = disk;
  auto count = irrep_count_check(level);
  out["irreps"] = {{"per_grade", count.per_grade}, {"total", count.total}, {"expected", count.expected}, {"ok", count.ok}};
  return out;
}

json cmd_gram(const RunConfig& cfg, int n) {
  check_strands(n, cfg);
  auto ctx = make_context(cfg, false);
  auto k = gram_exponents(n, cfg.max_expansions);
  Matrix g = gram_matrix(n, *ctx, cfg.max_expansions);
  json out;
  out["n"] = n;
  out["context"] = context_json(cfg);
  out["size"] = g.rows();
  out["exponents"] = k;
  out["determinant"] = to_json(determinant(g));
  json meander = json::array();
  for (int i = 1; i <= n; ++i) meander.push_back({{"i", i}, {"exponent", meander_exponent(n, i).get_str()}});
  out["meander_exponents"] = meander;
  return out;
}

json cmd_jw(const RunConfig& cfg, int n) {
  check_strands(n, cfg);
  if (catalan(n) > cfg.max_expansions) throw ResourceLimit("p_" + std::to_string(n) + " has more than --max-expansions terms");
  auto ctx = make_context(cfg, false);
  auto p = jones_wenzl(*ctx, n);
  json terms = json::array();
  for (const auto& [m, c] : p->element.terms()) terms.push_back({{"diagram", TLDiagram(n, n, m).text()}, {"coeff", to_json(c)}});
  json out;
  out["n"] = n;
  out["context"] = context_json(cfg);
  out["terms"] = terms;
  out["trace"] = to_json(markov_trace(p->element, *ctx));
  return out;
}

void print(const json& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : out.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb-Jones calculus: brackets, projectors, modular data, 3-manifold invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--max-strands", cfg.max_strands, "Largest strand count accepted")->check(CLI::PositiveNumber);
  app.add_option("--max-expansions", cfg.max_expansions, "Cap on diagram enumerations and label-vector sums")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto root_opts = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "Level parameter r (A a root of unity of order set by --class)")->check(CLI::Range(3, 1000));
    sub->add_option("--class", cfg.root_class, "Root class: 4r, 2r or r")->check(CLI::IsMember({"4r", "2r", "r"}));
    sub->add_option("--embed", cfg.embed, "Embedding exponent t, A = exp(2 pi i t / m)");
  };

  BraidInput braid_in;
  bool with_jones = false;
  auto braid_opts = [&](CLI::App* sub) {
    sub->add_option("--strands", braid_in.strands, "Strand count");
    sub->add_option("--word", braid_in.word, "Braid word, e.g. 1,-2,1 (omit for the trivial braid)");
    sub->add_option("--link", braid_in.link, "Link JSON file");
    root_opts(sub);
  };
  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket of a braid closure");
  braid_opts(bracket);
  bracket->add_flag("--jones", with_jones, "Also print the Jones polynomial");
  auto* jones = app.add_subcommand("jones", "Jones polynomial of a braid closure");
  braid_opts(jones);

  std::vector<std::string> verlinde;
  auto* modular = app.add_subcommand("modular-data", "Labels, dimensions, twists, s-tilde, fusion and Verlinde dimensions");
  root_opts(modular);
  modular->add_option("--verlinde", verlinde, "Verlinde dimension request g or g:a,b,...");

  std::string link_path;
  bool doubled = false;
  auto* rt = app.add_subcommand("rt", "Surgery invariant Z of a framed link");
  root_opts(rt);
  rt->add_option("--link", link_path, "Link JSON file")->required();
  rt->add_flag("--double", doubled, "Also print |Z|^2");

  std::string level, sign;
  auto* annular = app.add_subcommand("annular", "Annular idempotent tables at levels 1..3");
  annular->add_option("--level", level, "Level k")->required();
  annular->add_option("--d", sign, "Sign of the loop value: plus or minus")->required();

  int n = 0;
  auto* gram = app.add_subcommand("gram", "Gram matrix of TL_n and its determinant");
  auto* jw = app.add_subcommand("jw", "Jones-Wenzl projector p_n");
  for (auto* sub : {gram, jw}) {
    sub->add_option("--n", n, "Strand count")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--d", cfg.d, "Rational loop value instead of A");
    root_opts(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    json out;
    if (*bracket) out = cmd_bracket(cfg, braid_in, true, with_jones);
    else if (*jones) out = cmd_bracket(cfg, braid_in, false, true);
    else if (*modular) out = cmd_modular(cfg, verlinde);
    else if (*rt) out = cmd_rt(cfg, link_path, doubled);
    else if (*annular) out = cmd_annular(level, sign);
    else if (*gram) out = cmd_gram(cfg, n);
    else out = cmd_jw(cfg, n);
    print(out, cfg.format);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code();
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

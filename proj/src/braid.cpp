#include "tlj/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "tlj/jones_wenzl.hpp"

namespace tlj {

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), word(std::move(w)) {
  if (n < 0) throw InvalidParameters("strand count must be nonnegative");
  for (int l : word) {
    if (l == 0 || std::abs(l) > n - 1) {
      throw InvalidParameters("letter " + std::to_string(l) + " is not a generator of B_" + std::to_string(n));
    }
  }
}

BraidWord parse_braid(int strands, const std::string& word) {
  std::vector<int> w;
  std::stringstream ss(word);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) {
      if (!ss.eof()) throw ParseError("empty letter in braid word '" + word + "'");
      continue;
    }
    std::size_t used = 0;
    int l = 0;
    try {
      l = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("bad braid letter '" + tok + "'");
    w.push_back(l);
  }
  try {
    return BraidWord(strands, std::move(w));
  } catch (const InvalidParameters& e) {
    throw ParseError(e.what());
  }
}

std::string braid_text(const BraidWord& b) {
  std::string s;
  for (std::size_t i = 0; i < b.word.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(b.word[i]);
  }
  return s;
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (int l : b.word) w += l > 0 ? 1 : -1;
  return w;
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> w(b.word.rbegin(), b.word.rend());
  for (int& l : w) l = -l;
  return BraidWord(b.strands, std::move(w));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw ShapeMismatch("braids on different strand counts");
  std::vector<int> w = a.word;
  w.insert(w.end(), b.word.begin(), b.word.end());
  return BraidWord(a.strands, std::move(w));
}

BraidWord mirror(const BraidWord& b) {
  std::vector<int> w = b.word;
  for (int& l : w) l = -l;
  return BraidWord(b.strands, std::move(w));
}

TLElement resolve_braid(const BraidWord& b, const SkeinContext& ctx) {
  const Scalar a = ctx.a();
  const Scalar ainv = a.inverse();
  TLElement x = TLElement::identity(b.strands, ctx);
  for (int l : b.word) {
    const int i = std::abs(l);
    TLElement xu = compose_u(x, i, ctx);
    x = l > 0 ? x.scaled(a) + xu.scaled(ainv) : x.scaled(ainv) + xu.scaled(a);
  }
  return x;
}

Scalar bracket_closure(const BraidWord& b, const SkeinContext& ctx) { return markov_trace(resolve_braid(b, ctx), ctx); }

Scalar jones_polynomial(const BraidWord& b, const SkeinContext& ctx) {
  Scalar minus_a = -ctx.a();
  return minus_a.pow(-3L * writhe(b)) * bracket_closure(b, ctx) / ctx.d();
}

namespace {

// component index of every bottom position
std::vector<int> component_of(const BraidWord& b, std::vector<std::vector<int>>* cycles_out = nullptr) {
  std::vector<int> at(static_cast<std::size_t>(b.strands));
  for (int q = 0; q < b.strands; ++q) at[static_cast<std::size_t>(q)] = q;
  for (int l : b.word) std::swap(at[static_cast<std::size_t>(std::abs(l) - 1)], at[static_cast<std::size_t>(std::abs(l))]);
  // strand starting at bottom position s ends at top position perm[s]
  std::vector<int> perm(static_cast<std::size_t>(b.strands));
  for (int q = 0; q < b.strands; ++q) perm[static_cast<std::size_t>(at[static_cast<std::size_t>(q)])] = q;
  std::vector<int> comp(static_cast<std::size_t>(b.strands), -1);
  std::vector<std::vector<int>> cycles;
  for (int s = 0; s < b.strands; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> cyc;
    for (int p = s; comp[static_cast<std::size_t>(p)] < 0; p = perm[static_cast<std::size_t>(p)]) {
      comp[static_cast<std::size_t>(p)] = static_cast<int>(cycles.size());
      cyc.push_back(p);
    }
    cycles.push_back(std::move(cyc));
  }
  if (cycles_out) *cycles_out = std::move(cycles);
  return comp;
}

}  // namespace

std::vector<std::vector<int>> closure_components(const BraidWord& b) {
  std::vector<std::vector<int>> cycles;
  component_of(b, &cycles);
  return cycles;
}

void validate(const ColoredFramedLink& link) {
  const auto n = closure_components(link.braid).size();
  if (link.components.size() != n) {
    throw InvalidParameters("link has " + std::to_string(n) + " components but " +
                            std::to_string(link.components.size()) + " were described");
  }
  for (const auto& c : link.components)
    if (c.color < 0) throw InvalidParameters("component colours must be nonnegative");
}

namespace {

// Calls f(left start strand, right start strand, sign) for every crossing.
template <class F>
void for_each_crossing(const BraidWord& b, F&& f) {
  std::vector<int> at(static_cast<std::size_t>(b.strands));
  for (int q = 0; q < b.strands; ++q) at[static_cast<std::size_t>(q)] = q;
  for (int l : b.word) {
    const auto q = static_cast<std::size_t>(std::abs(l) - 1);
    f(at[q], at[q + 1], l > 0 ? 1 : -1);
    std::swap(at[q], at[q + 1]);
  }
}

}  // namespace

std::vector<int> self_writhes(const BraidWord& b) {
  std::vector<std::vector<int>> cycles;
  auto comp = component_of(b, &cycles);
  std::vector<int> w(cycles.size(), 0);
  for_each_crossing(b, [&](int s, int t, int sign) {
    if (comp[static_cast<std::size_t>(s)] == comp[static_cast<std::size_t>(t)]) w[static_cast<std::size_t>(comp[static_cast<std::size_t>(s)])] += sign;
  });
  return w;
}

std::vector<std::vector<int>> mixed_crossing_sums(const BraidWord& b) {
  std::vector<std::vector<int>> cycles;
  auto comp = component_of(b, &cycles);
  std::vector<std::vector<int>> m(cycles.size(), std::vector<int>(cycles.size(), 0));
  for_each_crossing(b, [&](int s, int t, int sign) {
    auto cs = static_cast<std::size_t>(comp[static_cast<std::size_t>(s)]);
    auto ct = static_cast<std::size_t>(comp[static_cast<std::size_t>(t)]);
    if (cs == ct) return;
    m[cs][ct] += sign;
    m[ct][cs] += sign;
  });
  return m;
}

Scalar kink_value(const SkeinContext& ctx, int c) {
  Scalar v = ctx.a().pow(static_cast<long>(c) * (c + 2));
  return c % 2 ? -v : v;
}

BraidWord cable_word(const BraidWord& b, const std::vector<int>& colors_by_component) {
  auto comp = component_of(b);
  std::vector<int> width(static_cast<std::size_t>(b.strands));
  int total = 0;
  for (int s = 0; s < b.strands; ++s) {
    width[static_cast<std::size_t>(s)] = colors_by_component.at(static_cast<std::size_t>(comp[static_cast<std::size_t>(s)]));
    total += width[static_cast<std::size_t>(s)];
  }
  std::vector<int> at(static_cast<std::size_t>(b.strands));
  for (int q = 0; q < b.strands; ++q) at[static_cast<std::size_t>(q)] = q;
  std::vector<int> out;
  for (int l : b.word) {
    const auto q = static_cast<std::size_t>(std::abs(l) - 1);
    const int sign = l > 0 ? 1 : -1;
    int offset = 0;
    for (std::size_t u = 0; u < q; ++u) offset += width[static_cast<std::size_t>(at[u])];
    const int a = width[static_cast<std::size_t>(at[q])], c = width[static_cast<std::size_t>(at[q + 1])];
    // each left-band strand, rightmost first, passes the whole right band
    for (int k = a - 1; k >= 0; --k)
      for (int j = 1; j <= c; ++j) out.push_back(sign * (offset + k + j));
    std::swap(at[q], at[q + 1]);
  }
  return BraidWord(std::max(total, 1), std::move(out));
}

TLElement cable_and_insert(const ColoredFramedLink& link, const SkeinContext& ctx) {
  validate(link);
  const BraidWord& b = link.braid;
  std::vector<std::vector<int>> cycles;
  auto comp = component_of(b, &cycles);
  std::vector<int> colors;
  for (const auto& c : link.components) colors.push_back(c.color);
  BraidWord cabled = cable_word(b, colors);
  int total = 0;
  for (int s = 0; s < b.strands; ++s) total += colors[static_cast<std::size_t>(comp[static_cast<std::size_t>(s)])];
  // projectors at the bottom, one per component, at its minimum position
  TLElement bottom = TLElement::identity(0, ctx);
  for (int s = 0; s < b.strands; ++s) {
    const int ci = comp[static_cast<std::size_t>(s)];
    const int w = colors[static_cast<std::size_t>(ci)];
    const bool first = cycles[static_cast<std::size_t>(ci)].front() == s;
    bottom = tensor(bottom, first ? jones_wenzl(ctx, w)->element : TLElement::identity(w, ctx));
  }
  if (total == 0) return bottom;
  const Scalar a = ctx.a();
  const Scalar ainv = a.inverse();
  TLElement x = bottom;
  for (int l : cabled.word) {
    TLElement xu = compose_u(x, std::abs(l), ctx);
    x = l > 0 ? x.scaled(a) + xu.scaled(ainv) : x.scaled(ainv) + xu.scaled(a);
  }
  return x;
}

Scalar colored_bracket(const ColoredFramedLink& link, const SkeinContext& ctx) {
  TLElement x = cable_and_insert(link, ctx);
  Scalar value = markov_trace(x, ctx);
  auto sw = self_writhes(link.braid);
  for (std::size_t c = 0; c < link.components.size(); ++c) {
    const int shift = link.components[c].framing - sw[c];
    if (shift != 0 && link.components[c].color != 0) value *= kink_value(ctx, link.components[c].color).pow(shift);
  }
  return value;
}

ColoredFramedLink link_from_json(const nlohmann::json& j) {
  try {
    ColoredFramedLink link;
    std::vector<int> word = j.at("word").get<std::vector<int>>();
    try {
      link.braid = BraidWord(j.at("strands").get<int>(), std::move(word));
    } catch (const InvalidParameters& e) {
      throw ParseError(e.what());
    }
    if (j.contains("components")) {
      for (const auto& c : j["components"]) {
        LinkComponent lc;
        lc.framing = c.value("framing", 0);
        lc.color = c.value("color", 1);
        link.components.push_back(lc);
      }
    } else {
      link.components.assign(closure_components(link.braid).size(), LinkComponent{});
    }
    try {
      validate(link);
    } catch (const InvalidParameters& e) {
      throw ParseError(e.what());
    }
    return link;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed link JSON: ") + e.what());
  }
}

nlohmann::json link_to_json(const ColoredFramedLink& link) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : link.components) comps.push_back({{"framing", c.framing}, {"color", c.color}});
  return {{"strands", link.braid.strands}, {"word", link.braid.word}, {"components", comps}};
}

}  // namespace tlj

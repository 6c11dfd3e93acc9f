#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tlj/tl.hpp"

namespace tlj {

/// Artin word: letter +i is sigma_i, -i its inverse, 1 <= i <= strands-1.
/// Zero strands present the empty link.
struct BraidWord {
  int strands = 1;
  std::vector<int> word;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> w);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// "1,-2,1" (empty string for the empty word).
BraidWord parse_braid(int strands, const std::string& word);
std::string braid_text(const BraidWord& b);

int writhe(const BraidWord& b);
/// Inverse word: reversed with every letter negated.
BraidWord inverse(const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b);
/// All letters negated.
BraidWord mirror(const BraidWord& b);

/// Image in TL_n: sigma_i -> A id + A^{-1} U_i, letters applied bottom to top.
TLElement resolve_braid(const BraidWord& b, const SkeinContext& ctx);
/// Kauffman bracket of the closure with blackboard framing; the unknot is d.
Scalar bracket_closure(const BraidWord& b, const SkeinContext& ctx);
/// (-A)^{-3 w} <closure> / d.
Scalar jones_polynomial(const BraidWord& b, const SkeinContext& ctx);

/// Components of the closure as cycles of the underlying permutation, each
/// listed from its minimum bottom position, ordered by that minimum.
std::vector<std::vector<int>> closure_components(const BraidWord& b);

struct LinkComponent {
  int framing = 0;
  int color = 1;
};

struct ColoredFramedLink {
  BraidWord braid;
  std::vector<LinkComponent> components;
};

/// Checks the component count against the closure permutation.
void validate(const ColoredFramedLink& link);

/// Per component: sum of signs of crossings between its own strands.
std::vector<int> self_writhes(const BraidWord& b);
/// Sum of signs of crossings between distinct components i and j.
std::vector<std::vector<int>> mixed_crossing_sums(const BraidWord& b);

/// Value of a positive kink on a band coloured c: (-1)^c A^{c(c+2)}.
Scalar kink_value(const SkeinContext& ctx, int c);

/// The cabled, projector-inserted braid image whose trace is the bracket
/// of the blackboard-framed coloured link.
TLElement cable_and_insert(const ColoredFramedLink& link, const SkeinContext& ctx);
/// Cabled braid word (no projectors): every crossing of bands of colours a, b
/// becomes a x b crossings of the same sign.
BraidWord cable_word(const BraidWord& b, const std::vector<int>& colors_by_component);

/// Bracket of the coloured framed link: the cabled trace times
/// kink_value(c)^{framing - self writhe} per component.
Scalar colored_bracket(const ColoredFramedLink& link, const SkeinContext& ctx);

ColoredFramedLink link_from_json(const nlohmann::json& j);
nlohmann::json link_to_json(const ColoredFramedLink& link);

}  // namespace tlj

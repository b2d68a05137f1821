#ifndef WEYLKIT_IO_HPP
#define WEYLKIT_IO_HPP

#include <string>
#include <vector>

#include "weylkit/affine.hpp"
#include "weylkit/coxeter.hpp"
#include "weylkit/hecke.hpp"

namespace weylkit {

/// "0 1 0" -> {0, 1, 0}
std::vector<int> parse_word(const std::string& text);
/// "3,0" -> {3, 0}
std::vector<long> parse_comma_longs(const std::string& text);
/// Element syntax: "s:0 1 0" (word) or "w:3,0" (window).
AffinePermutation parse_affine(int n, const std::string& spec);
/// Cocharacter syntax: "l:1,0,-1" (the "l:" prefix is optional).
Cocharacter parse_cocharacter(const std::string& spec);

std::string format_word(const std::vector<int>& word);

/// One system source: preset name or JSON file path.
std::shared_ptr<const CoxeterSystem> load_system(const std::string& preset,
                                                 const std::string& file);

/// Hecke expansion rows: {"word": [...], "length": l, "coeff": {"<exp>": c}}.
std::string hecke_to_json(const HeckeElement& h);
std::string hecke_to_tsv(const HeckeElement& h);
std::string support_to_json(const std::set<GroupElement>& s);
std::string support_to_tsv(const std::set<GroupElement>& s);

std::string affine_rows_tsv(const std::vector<AffinePermutation>& vs);
std::string affine_rows_json(const std::vector<AffinePermutation>& vs);

}  // namespace weylkit

#endif  // WEYLKIT_IO_HPP

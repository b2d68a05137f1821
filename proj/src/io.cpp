#include "weylkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace weylkit {

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("malformed word token: '" + tok + "'");
    }
  }
  return out;
}

std::vector<long> parse_comma_longs(const std::string& text) {
  std::vector<long> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    try {
      size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("malformed integer list entry: '" + tok + "'");
    }
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

AffinePermutation parse_affine(int n, const std::string& spec) {
  if (spec.rfind("w:", 0) == 0)
    return AffinePermutation(n, parse_comma_longs(spec.substr(2)));
  if (spec.rfind("s:", 0) == 0) {
    auto word = parse_word(spec.substr(2));
    for (int s : word)
      if (s < 0 || s >= n) throw DomainError("generator index out of range: " + std::to_string(s));
    return AffinePermutation::from_word(n, word);
  }
  throw DomainError("element syntax must be 'w:<window>' or 's:<word>': " + spec);
}

Cocharacter parse_cocharacter(const std::string& spec) {
  std::string body = spec.rfind("l:", 0) == 0 ? spec.substr(2) : spec;
  return Cocharacter(parse_comma_longs(body));
}

std::string format_word(const std::vector<int>& word) {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << " ";
    os << word[i];
  }
  return os.str();
}

std::shared_ptr<const CoxeterSystem> load_system(const std::string& preset,
                                                 const std::string& file) {
  if (!preset.empty() && !file.empty())
    throw DomainError("exactly one system source expected (preset or file)");
  if (!preset.empty()) return CoxeterSystem::preset(preset);
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw DomainError("cannot open system file: " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return CoxeterSystem::create(CoxeterMatrix::from_json_text(ss.str()));
  }
  throw DomainError("a system source is required (--preset or --system)");
}

namespace {
nlohmann::json term_json(const GroupElement& w, const LaurentPoly& p) {
  nlohmann::json row;
  row["word"] = w.word();
  row["length"] = w.length();
  nlohmann::json coeff = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) coeff[std::to_string(e)] = c.get_str();
  row["coeff"] = std::move(coeff);
  return row;
}
}  // namespace

std::string hecke_to_json(const HeckeElement& h) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, p] : h) arr.push_back(term_json(w, p));
  return arr.dump();
}

std::string hecke_to_tsv(const HeckeElement& h) {
  std::ostringstream os;
  for (const auto& [w, p] : h)
    os << w.length() << "\t" << format_word(w.word()) << "\t" << p.to_string() << "\n";
  return os.str();
}

std::string support_to_json(const std::set<GroupElement>& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : s) {
    nlohmann::json row;
    row["word"] = w.word();
    row["length"] = w.length();
    arr.push_back(std::move(row));
  }
  return arr.dump();
}

std::string support_to_tsv(const std::set<GroupElement>& s) {
  std::ostringstream os;
  for (const auto& w : s) os << w.length() << "\t" << format_word(w.word()) << "\n";
  return os.str();
}

std::string affine_rows_tsv(const std::vector<AffinePermutation>& vs) {
  std::ostringstream os;
  for (const auto& v : vs)
    os << v.length() << "\t" << v.window_string() << "\t"
       << format_word(v.canonical_word()) << "\n";
  return os.str();
}

std::string affine_rows_json(const std::vector<AffinePermutation>& vs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : vs) {
    nlohmann::json row;
    row["length"] = v.length();
    row["window"] = v.window();
    row["word"] = v.canonical_word();
    arr.push_back(std::move(row));
  }
  return arr.dump();
}

}  // namespace weylkit

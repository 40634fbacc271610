#include "tenwein/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tenwein {

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_label(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (start == i) throw ParseError("expected a positive integer in '" + s + "'");
  int v = std::stoi(s.substr(start, i - start));
  if (v < 1) throw ParseError("labels must be >= 1");
  return v;
}

Permutation parse_one_line(const std::string& s) {
  std::vector<int> images;
  size_t i = 1;  // past '['
  skip_ws(s, i);
  while (i < s.size() && s[i] != ']') {
    images.push_back(parse_label(s, i));
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') {
      ++i;
      skip_ws(s, i);
    }
  }
  if (i >= s.size() || s[i] != ']') throw ParseError("unterminated one-line notation");
  ++i;
  skip_ws(s, i);
  if (i != s.size()) throw ParseError("trailing characters after one-line notation");
  if (images.empty()) throw ParseError("one-line notation must be non-empty");
  try {
    return Permutation(images);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Permutation parse_cycles(const std::string& s, int min_degree) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  int max_label = 0;
  skip_ws(s, i);
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    skip_ws(s, i);
    while (i < s.size() && s[i] != ')') {
      int v = parse_label(s, i);
      cyc.push_back(v);
      max_label = std::max(max_label, v);
      skip_ws(s, i);
      if (i < s.size() && s[i] == ',') {
        ++i;
        skip_ws(s, i);
      }
    }
    if (i >= s.size()) throw ParseError("unterminated cycle");
    ++i;  // past ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws(s, i);
  }
  int n = std::max({max_label, min_degree, 1});
  std::vector<int> images(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) images[static_cast<size_t>(v) - 1] = v;
  std::vector<char> moved(static_cast<size_t>(n), 0);
  for (const auto& cyc : cycles) {
    for (size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j];
      int to = cyc[(j + 1) % cyc.size()];
      if (moved[static_cast<size_t>(from) - 1])
        throw ParseError("label repeated across cycles");
      moved[static_cast<size_t>(from) - 1] = 1;
      images[static_cast<size_t>(from) - 1] = to;
    }
  }
  try {
    return Permutation(images);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Permutation parse_permutation(const std::string& text, int min_degree) {
  size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size()) throw ParseError("empty permutation");
  std::string body = text.substr(i);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.pop_back();
  if (body.front() == '[') {
    Permutation p = parse_one_line(body);
    if (p.degree() < min_degree) {
      // lift into S_min_degree, acting on the first entries
      std::vector<int> block(static_cast<size_t>(p.degree()));
      for (int v = 1; v <= p.degree(); ++v) block[static_cast<size_t>(v) - 1] = v;
      return p.lifted_to(block, min_degree);
    }
    return p;
  }
  if (body.front() == '(') return parse_cycles(body, min_degree);
  throw ParseError("permutation must start with '(' or '[': '" + text + "'");
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream os;
  for (const auto& cyc : p.cycles()) {
    os << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

SetPartition parse_set_partition(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  size_t i = 0;
  int max_label = 0;
  skip_ws(text, i);
  while (i < text.size()) {
    if (text[i] != '{') throw ParseError("expected '{' in set partition");
    ++i;
    std::vector<int> block;
    skip_ws(text, i);
    while (i < text.size() && text[i] != '}') {
      int v = parse_label(text, i);
      block.push_back(v);
      max_label = std::max(max_label, v);
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws(text, i);
      }
    }
    if (i >= text.size()) throw ParseError("unterminated block");
    ++i;
    if (block.empty()) throw ParseError("empty block in set partition");
    blocks.push_back(std::move(block));
    skip_ws(text, i);
  }
  if (blocks.empty()) throw ParseError("empty set partition");
  try {
    return SetPartition(max_label, std::move(blocks));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string format_set_partition(const SetPartition& sp) {
  std::ostringstream os;
  for (const auto& b : sp.blocks()) {
    os << '{';
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) os << ',';
      os << b[i];
    }
    os << '}';
  }
  return os.str();
}

CycleType parse_cycle_type(const std::string& text) {
  std::string body = text;
  std::erase_if(body, [](char c) { return c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c)); });
  if (body.empty()) throw ParseError("empty cycle type");
  std::vector<int> parts;
  size_t i = 0;
  while (i < body.size()) {
    parts.push_back(parse_label(body, i));
    if (i < body.size()) {
      if (body[i] != ',') throw ParseError("expected ',' in cycle type");
      ++i;
    }
  }
  try {
    return CycleType(parts);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string format_cycle_type(const CycleType& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.parts().size(); ++i) {
    if (i) os << ',';
    os << t.parts()[i];
  }
  return os.str();
}

std::vector<Permutation> unify_degrees(std::vector<Permutation> ps) {
  int n = 1;
  for (const auto& p : ps) n = std::max(n, p.degree());
  for (auto& p : ps) {
    if (p.degree() < n) {
      std::vector<int> block(static_cast<size_t>(p.degree()));
      for (int v = 1; v <= p.degree(); ++v) block[static_cast<size_t>(v) - 1] = v;
      p = p.lifted_to(block, n);
    }
  }
  return ps;
}

}  // namespace tenwein

#include "braidquot/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "braidquot/element.hpp"  // kMaxDegree
#include "braidquot/error.hpp"

namespace braidquot {

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  if (static_cast<int>(img_.size()) > kMaxDegree)
    throw Error("permutation degree exceeds supported maximum of 32");
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v])
      throw Error("image list is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<std::uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  // Parity = (-1)^(degree - #cycles).
  std::vector<bool> seen(img_.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = img_[j]) seen[j] = true;
  }
  return ((img_.size() - cycles) % 2) == 0;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw Error("compose: degree mismatch (" + std::to_string(a.degree()) +
                " vs " + std::to_string(b.degree()) + ")");
  std::vector<std::uint8_t> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = b.img_[a.img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(img));
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(' << (i + 1);
    seen[i] = true;
    for (std::size_t j = img_[i]; j != i; j = img_[j]) {
      out << ' ' << (j + 1);
      seen[j] = true;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw ParseError("cycle notation: unsupported degree " + std::to_string(degree));
  std::vector<std::uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("cycle notation: expected '(' in \"" + text + "\"");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t end = pos;
      while (end < text.size() && isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos)
        throw ParseError("cycle notation: expected point in \"" + text + "\"");
      int point = std::stoi(text.substr(pos, end - pos));
      if (point < 1 || point > degree)
        throw ParseError("cycle notation: point " + std::to_string(point) +
                         " out of range for degree " + std::to_string(degree));
      cycle.push_back(point - 1);  // files are 1-based, internals 0-based
      pos = end;
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;  // tolerate commas
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (img[from] != from)
        throw ParseError("cycle notation: point " + std::to_string(from + 1) +
                         " repeated in \"" + text + "\"");
      img[from] = static_cast<std::uint8_t>(to);
    }
    skip_ws();
  }
  return Permutation(std::move(img));
}

}  // namespace braidquot

#include "dcc/freegroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcc {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().cancels(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

constexpr std::string_view kDot = "\xC2\xB7";  // U+00B7 MIDDLE DOT

}  // namespace

GroupWord GroupWord::from_letters(const std::vector<Letter>& letters) {
  GroupWord w;
  w.letters_.reserve(letters.size());
  for (const auto& l : letters) push_reduced(w.letters_, l);
  return w;
}

GroupWord mul(const GroupWord& lhs, const GroupWord& rhs) {
  if (lhs.is_identity()) return rhs;
  if (rhs.is_identity()) return lhs;
  std::vector<Letter> out = lhs.letters();
  out.reserve(lhs.length() + rhs.length());
  for (const auto& l : rhs.letters()) push_reduced(out, l);
  return GroupWord::from_letters(out);
}

GroupWord inverse(const GroupWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverted());
  }
  return GroupWord::from_letters(out);
}

CyclicWord cyclic_canonical(const GroupWord& w) {
  const auto& letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  const std::vector<Letter> core(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                 letters.begin() + static_cast<std::ptrdiff_t>(hi));
  const std::size_t n = core.size();
  std::vector<Letter> best = core;
  std::vector<Letter> rot(n);
  for (std::size_t shift = 1; shift < n; ++shift) {
    for (std::size_t i = 0; i < n; ++i) rot[i] = core[(i + shift) % n];
    if (rot < best) best = rot;
  }
  // Rotations of a cyclically reduced word are freely reduced.
  return CyclicWord(GroupWord::from_letters(best));
}

CyclicWord inverse(const CyclicWord& c) { return cyclic_canonical(inverse(c.rep())); }

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("generator alphabet must not be empty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty generator name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw std::invalid_argument("duplicate generator name '" + names_[i] + "'");
      }
    }
  }
}

Alphabet Alphabet::standard(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("b" + std::to_string(i));
  return Alphabet(std::move(names));
}

const std::string& Alphabet::name(Generator g) const {
  if (!contains(g)) throw std::out_of_range("generator id out of range");
  return names_[g.id];
}

std::optional<Generator> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Generator{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

std::string Alphabet::format(const GroupWord& w) const {
  if (w.is_identity()) return "e";
  std::string out;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) out += kDot;
    first = false;
    out += name(l.gen);
    if (l.inverse) out += "^-1";
  }
  return out;
}

GroupWord Alphabet::parse_word(std::string_view text) const {
  if (text == "e") return {};
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(kDot, pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    bool inv = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inv = true;
      tok.remove_suffix(3);
    }
    auto g = find(tok);
    if (!g) throw std::invalid_argument("unknown generator '" + std::string(tok) + "'");
    letters.push_back({*g, inv});
    if (next == text.size()) break;
    pos = next + kDot.size();
  }
  return GroupWord::from_letters(letters);
}

}  // namespace dcc

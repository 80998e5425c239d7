#pragma once

// Free group on a finite generator alphabet: reduced words, inversion and
// canonical representatives of conjugacy classes (used for circle labels).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcc {

struct Generator {
  std::uint32_t id = 0;

  auto operator<=>(const Generator&) const = default;
};

/// A generator raised to +1 or -1. Letters order by generator id first and
/// then by exponent, with +1 before -1.
struct Letter {
  Generator gen;
  bool inverse = false;

  auto operator<=>(const Letter&) const = default;

  Letter inverted() const { return {gen, !inverse}; }
  bool cancels(const Letter& other) const {
    return gen == other.gen && inverse != other.inverse;
  }
};

/// A freely reduced word. The empty word is the neutral element e.
class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord generator(Generator g) { return from_letters({Letter{g, false}}); }
  /// Freely reduces an arbitrary letter sequence.
  static GroupWord from_letters(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  auto operator<=>(const GroupWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

GroupWord mul(const GroupWord& lhs, const GroupWord& rhs);
GroupWord inverse(const GroupWord& w);

/// Canonical representative of a conjugacy class: cyclically reduced and
/// lexicographically least among its rotations.
class CyclicWord {
 public:
  CyclicWord() = default;

  const GroupWord& rep() const { return rep_; }
  bool is_identity() const { return rep_.is_identity(); }

  auto operator<=>(const CyclicWord&) const = default;

 private:
  friend CyclicWord cyclic_canonical(const GroupWord& w);
  explicit CyclicWord(GroupWord rep) : rep_(std::move(rep)) {}

  GroupWord rep_;
};

CyclicWord cyclic_canonical(const GroupWord& w);
CyclicWord inverse(const CyclicWord& c);

/// Names of the declared generators. Fixed for the lifetime of a session.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);
  /// b1..bn, the alphabet used by the protocol drivers.
  static Alphabet standard(std::size_t n = 4);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Generator g) const;
  std::optional<Generator> find(std::string_view name) const;
  bool contains(Generator g) const { return g.id < names_.size(); }

  /// "e" for the neutral element, otherwise letters joined by a middle dot,
  /// inverses written with a "^-1" suffix, e.g. "b1·b2^-1".
  std::string format(const GroupWord& w) const;
  /// Inverse of format(); throws std::invalid_argument on unknown names.
  GroupWord parse_word(std::string_view text) const;

 private:
  std::vector<std::string> names_;
};

}  // namespace dcc

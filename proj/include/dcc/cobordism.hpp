#pragma once

// Group-labelled 1-cobordisms between finite sequences of signed points.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dcc/freegroup.hpp"

namespace dcc {

enum class Sign : std::uint8_t { Plus, Minus };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// A finite sequence of oriented points; the empty sequence is the unit o.
using ObjectSeq = std::vector<Sign>;

ObjectSeq dual_object(const ObjectSeq& a);
ObjectSeq concat(const ObjectSeq& a, const ObjectSeq& b);
std::string format(const ObjectSeq& a);  // "o" or e.g. "+-+"

enum class Side : std::uint8_t { Source, Target };

struct BoundaryPoint {
  Side side = Side::Source;
  std::uint32_t index = 0;

  auto operator<=>(const BoundaryPoint&) const = default;
};

/// A directed labelled segment. The label is read along the direction.
struct Segment {
  BoundaryPoint from;
  BoundaryPoint to;
  GroupWord label;

  auto operator<=>(const Segment&) const = default;
};

/// A 1-cobordism src -> tgt whose components carry free group elements.
/// Values are kept in canonical form (segments sorted by their initial
/// point, circles sorted), so structural comparison decides equality.
class GCob {
 public:
  /// Validates the boundary invariants and canonicalises; throws
  /// InvalidCobordism on bad data.
  GCob(ObjectSeq src, ObjectSeq tgt, std::vector<Segment> segments,
       std::vector<CyclicWord> circles = {});

  static GCob identity(const ObjectSeq& a);
  static GCob empty() { return identity({}); }
  /// The arrow (+) -> (+) with one segment labelled w.
  static GCob segment(const GroupWord& w);
  /// The arrow o -> o consisting of a single circle.
  static GCob circle(const CyclicWord& c);

  const ObjectSeq& src() const { return src_; }
  const ObjectSeq& tgt() const { return tgt_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<CyclicWord>& circles() const { return circles_; }

  auto operator<=>(const GCob&) const = default;

 private:
  struct Trusted {};
  GCob(Trusted, ObjectSeq src, ObjectSeq tgt, std::vector<Segment> segments,
       std::vector<CyclicWord> circles);
  void canonicalise();

  ObjectSeq src_;
  ObjectSeq tgt_;
  std::vector<Segment> segments_;
  std::vector<CyclicWord> circles_;

  friend GCob compose(const GCob&, const GCob&);
  friend GCob tensor(const GCob&, const GCob&);
  friend GCob dagger(const GCob&);
};

/// g∘f: glue f: a→b to g: b→c along b. Throws TypeMismatch if f.tgt ≠ g.src.
GCob compose(const GCob& g, const GCob& f);
GCob tensor(const GCob& f, const GCob& g);
GCob dagger(const GCob& f);

GCob eta(const ObjectSeq& a);  // o → a*⊗a
GCob eps(const ObjectSeq& a);  // a⊗a* → o

GCob transpose_star(const GCob& f);  // f*: b* → a*
GCob lower_star(const GCob& f);      // f_*: a* → b*
GCob name(const GCob& f);            // o → a*⊗b
GCob coname(const GCob& f);          // a⊗b* → o

/// Moves source position i to target position perm[i]. Throws
/// InvalidCobordism unless perm is a bijection.
GCob permutation(const ObjectSeq& a, const std::vector<std::uint32_t>& perm);
GCob sigma(const ObjectSeq& a, const ObjectSeq& b);  // a⊗b → b⊗a

inline bool equality(const GCob& f, const GCob& g) { return f == g; }

}  // namespace dcc

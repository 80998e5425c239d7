#include "dcc/cobordism.hpp"

#include <algorithm>
#include <optional>

#include "dcc/error.hpp"

namespace dcc {

ObjectSeq dual_object(const ObjectSeq& a) {
  ObjectSeq out(a.rbegin(), a.rend());
  for (auto& s : out) s = flip(s);
  return out;
}

ObjectSeq concat(const ObjectSeq& a, const ObjectSeq& b) {
  ObjectSeq out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string format(const ObjectSeq& a) {
  if (a.empty()) return "o";
  std::string out;
  for (auto s : a) out += s == Sign::Plus ? '+' : '-';
  return out;
}

namespace {

// A point may be the initial point of a segment iff it is a source + or a
// target -.
bool is_initial(const ObjectSeq& src, const ObjectSeq& tgt, BoundaryPoint p) {
  const Sign s = p.side == Side::Source ? src[p.index] : tgt[p.index];
  return (p.side == Side::Source) == (s == Sign::Plus);
}

std::uint32_t u32(std::size_t n) { return static_cast<std::uint32_t>(n); }

}  // namespace

GCob::GCob(ObjectSeq src, ObjectSeq tgt, std::vector<Segment> segments,
           std::vector<CyclicWord> circles)
    : src_(std::move(src)), tgt_(std::move(tgt)), segments_(std::move(segments)),
      circles_(std::move(circles)) {
  std::vector<char> seen_src(src_.size(), 0);
  std::vector<char> seen_tgt(tgt_.size(), 0);
  auto visit = [&](BoundaryPoint p, bool initial) {
    auto& seen = p.side == Side::Source ? seen_src : seen_tgt;
    if (p.index >= seen.size()) throw InvalidCobordism("segment endpoint out of range");
    if (seen[p.index]) throw InvalidCobordism("boundary point used twice");
    seen[p.index] = 1;
    if (is_initial(src_, tgt_, p) != initial) {
      throw InvalidCobordism("segment direction disagrees with boundary orientation");
    }
  };
  for (const auto& seg : segments_) {
    visit(seg.from, true);
    visit(seg.to, false);
  }
  auto all = [](const std::vector<char>& v) {
    return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; });
  };
  if (!all(seen_src) || !all(seen_tgt)) throw InvalidCobordism("unmatched boundary point");
  canonicalise();
}

GCob::GCob(Trusted, ObjectSeq src, ObjectSeq tgt, std::vector<Segment> segments,
           std::vector<CyclicWord> circles)
    : src_(std::move(src)), tgt_(std::move(tgt)), segments_(std::move(segments)),
      circles_(std::move(circles)) {
  canonicalise();
}

void GCob::canonicalise() {
  std::sort(segments_.begin(), segments_.end());
  std::sort(circles_.begin(), circles_.end());
}

GCob GCob::identity(const ObjectSeq& a) {
  std::vector<Segment> segs;
  segs.reserve(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    BoundaryPoint s{Side::Source, i};
    BoundaryPoint t{Side::Target, i};
    if (a[i] == Sign::Plus) {
      segs.push_back({s, t, {}});
    } else {
      segs.push_back({t, s, {}});
    }
  }
  return GCob(Trusted{}, a, a, std::move(segs), {});
}

GCob GCob::segment(const GroupWord& w) {
  return GCob(Trusted{}, {Sign::Plus}, {Sign::Plus},
              {{{Side::Source, 0}, {Side::Target, 0}, w}}, {});
}

GCob GCob::circle(const CyclicWord& c) { return GCob(Trusted{}, {}, {}, {}, {c}); }

GCob compose(const GCob& g, const GCob& f) {
  if (f.tgt() != g.src()) {
    throw TypeMismatch("cannot glue " + format(f.tgt()) + " onto " + format(g.src()));
  }
  const std::size_t mid = f.tgt().size();

  // Pieces are the segments of f and g. A piece endpoint lying on the
  // middle object is recorded by its middle index; outer endpoints keep
  // their coordinates in the composite (source from f, target from g).
  struct Piece {
    BoundaryPoint from;
    BoundaryPoint to;
    std::optional<std::uint32_t> from_mid;
    std::optional<std::uint32_t> to_mid;
    const GroupWord* label;
  };
  std::vector<Piece> pieces;
  pieces.reserve(f.segments().size() + g.segments().size());
  for (const auto& s : f.segments()) {
    Piece p{s.from, s.to, {}, {}, &s.label};
    if (s.from.side == Side::Target) p.from_mid = s.from.index;
    if (s.to.side == Side::Target) p.to_mid = s.to.index;
    pieces.push_back(p);
  }
  for (const auto& s : g.segments()) {
    Piece p{s.from, s.to, {}, {}, &s.label};
    if (s.from.side == Side::Source) p.from_mid = s.from.index;
    if (s.to.side == Side::Source) p.to_mid = s.to.index;
    pieces.push_back(p);
  }

  std::vector<std::size_t> starts_at(mid, 0);
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (pieces[k].from_mid) starts_at[*pieces[k].from_mid] = k;
  }

  std::vector<char> used(pieces.size(), 0);
  std::vector<Segment> segs;
  std::vector<CyclicWord> circles = f.circles();
  circles.insert(circles.end(), g.circles().begin(), g.circles().end());

  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (pieces[k].from_mid) continue;
    used[k] = 1;
    GroupWord label = *pieces[k].label;
    std::size_t cur = k;
    while (pieces[cur].to_mid) {
      cur = starts_at[*pieces[cur].to_mid];
      used[cur] = 1;
      label = mul(*pieces[cur].label, label);
    }
    segs.push_back({pieces[k].from, pieces[cur].to, std::move(label)});
  }
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (used[k]) continue;
    GroupWord label;
    std::size_t cur = k;
    do {
      used[cur] = 1;
      label = mul(*pieces[cur].label, label);
      cur = starts_at[*pieces[cur].to_mid];
    } while (cur != k);
    circles.push_back(cyclic_canonical(label));
  }
  return GCob(GCob::Trusted{}, f.src(), g.tgt(), std::move(segs), std::move(circles));
}

GCob tensor(const GCob& f, const GCob& g) {
  const auto ns = u32(f.src().size());
  const auto nt = u32(f.tgt().size());
  auto shift = [&](BoundaryPoint p) {
    p.index += p.side == Side::Source ? ns : nt;
    return p;
  };
  std::vector<Segment> segs = f.segments();
  for (const auto& s : g.segments()) segs.push_back({shift(s.from), shift(s.to), s.label});
  std::vector<CyclicWord> circles = f.circles();
  circles.insert(circles.end(), g.circles().begin(), g.circles().end());
  return GCob(GCob::Trusted{}, concat(f.src(), g.src()), concat(f.tgt(), g.tgt()),
              std::move(segs), std::move(circles));
}

GCob dagger(const GCob& f) {
  auto swap_side = [](BoundaryPoint p) {
    p.side = p.side == Side::Source ? Side::Target : Side::Source;
    return p;
  };
  std::vector<Segment> segs;
  segs.reserve(f.segments().size());
  for (const auto& s : f.segments()) {
    segs.push_back({swap_side(s.to), swap_side(s.from), inverse(s.label)});
  }
  std::vector<CyclicWord> circles;
  circles.reserve(f.circles().size());
  for (const auto& c : f.circles()) circles.push_back(inverse(c));
  return GCob(GCob::Trusted{}, f.tgt(), f.src(), std::move(segs), std::move(circles));
}

namespace {

// Rebuilds f over new boundary objects, sending each old source/target
// point to the given position. Labels and directions are unchanged.
GCob reindex(const GCob& f, ObjectSeq src, ObjectSeq tgt,
             const std::vector<BoundaryPoint>& from_src,
             const std::vector<BoundaryPoint>& from_tgt) {
  auto move = [&](BoundaryPoint p) {
    return p.side == Side::Source ? from_src[p.index] : from_tgt[p.index];
  };
  std::vector<Segment> segs;
  segs.reserve(f.segments().size());
  for (const auto& s : f.segments()) segs.push_back({move(s.from), move(s.to), s.label});
  return GCob(std::move(src), std::move(tgt), std::move(segs), f.circles());
}

}  // namespace

GCob eta(const ObjectSeq& a) {
  const auto n = u32(a.size());
  std::vector<Segment> segs;
  for (std::uint32_t i = 0; i < n; ++i) {
    BoundaryPoint star{Side::Target, i};
    BoundaryPoint plain{Side::Target, n + (n - 1 - i)};
    if (a[n - 1 - i] == Sign::Plus) {
      segs.push_back({star, plain, {}});
    } else {
      segs.push_back({plain, star, {}});
    }
  }
  return GCob({}, concat(dual_object(a), a), std::move(segs));
}

GCob eps(const ObjectSeq& a) {
  const auto n = u32(a.size());
  std::vector<Segment> segs;
  for (std::uint32_t j = 0; j < n; ++j) {
    BoundaryPoint plain{Side::Source, j};
    BoundaryPoint star{Side::Source, n + (n - 1 - j)};
    if (a[j] == Sign::Plus) {
      segs.push_back({plain, star, {}});
    } else {
      segs.push_back({star, plain, {}});
    }
  }
  return GCob(concat(a, dual_object(a)), {}, std::move(segs));
}

GCob transpose_star(const GCob& f) {
  const auto n = u32(f.src().size());
  const auto m = u32(f.tgt().size());
  std::vector<BoundaryPoint> from_src(n);
  std::vector<BoundaryPoint> from_tgt(m);
  for (std::uint32_t k = 0; k < n; ++k) from_src[k] = {Side::Target, n - 1 - k};
  for (std::uint32_t k = 0; k < m; ++k) from_tgt[k] = {Side::Source, m - 1 - k};
  return reindex(f, dual_object(f.tgt()), dual_object(f.src()), from_src, from_tgt);
}

GCob lower_star(const GCob& f) { return transpose_star(dagger(f)); }

GCob name(const GCob& f) {
  const auto n = u32(f.src().size());
  const auto m = u32(f.tgt().size());
  std::vector<BoundaryPoint> from_src(n);
  std::vector<BoundaryPoint> from_tgt(m);
  for (std::uint32_t k = 0; k < n; ++k) from_src[k] = {Side::Target, n - 1 - k};
  for (std::uint32_t k = 0; k < m; ++k) from_tgt[k] = {Side::Target, n + k};
  return reindex(f, {}, concat(dual_object(f.src()), f.tgt()), from_src, from_tgt);
}

GCob coname(const GCob& f) {
  const auto n = u32(f.src().size());
  const auto m = u32(f.tgt().size());
  std::vector<BoundaryPoint> from_src(n);
  std::vector<BoundaryPoint> from_tgt(m);
  for (std::uint32_t k = 0; k < n; ++k) from_src[k] = {Side::Source, k};
  for (std::uint32_t k = 0; k < m; ++k) from_tgt[k] = {Side::Source, n + (m - 1 - k)};
  return reindex(f, concat(f.src(), dual_object(f.tgt())), {}, from_src, from_tgt);
}

GCob permutation(const ObjectSeq& a, const std::vector<std::uint32_t>& perm) {
  const std::size_t n = a.size();
  if (perm.size() != n) throw InvalidCobordism("permutation length differs from object length");
  ObjectSeq tgt(n);
  std::vector<char> hit(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || hit[perm[i]]) throw InvalidCobordism("not a bijection");
    hit[perm[i]] = 1;
    tgt[perm[i]] = a[i];
  }
  std::vector<Segment> segs;
  for (std::uint32_t i = 0; i < n; ++i) {
    BoundaryPoint s{Side::Source, i};
    BoundaryPoint t{Side::Target, perm[i]};
    if (a[i] == Sign::Plus) {
      segs.push_back({s, t, {}});
    } else {
      segs.push_back({t, s, {}});
    }
  }
  return GCob(a, std::move(tgt), std::move(segs));
}

GCob sigma(const ObjectSeq& a, const ObjectSeq& b) {
  const auto na = u32(a.size());
  const auto nb = u32(b.size());
  std::vector<std::uint32_t> perm(na + nb);
  for (std::uint32_t i = 0; i < na; ++i) perm[i] = nb + i;
  for (std::uint32_t j = 0; j < nb; ++j) perm[na + j] = j;
  return permutation(concat(a, b), perm);
}

}  // namespace dcc

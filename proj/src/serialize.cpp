#include "dcc/serialize.hpp"

#include <stdexcept>

namespace dcc {

namespace {

Json point(BoundaryPoint p) {
  return Json{{"side", p.side == Side::Source ? "source" : "target"}, {"index", p.index}};
}

BoundaryPoint point_from(const Json& j) {
  const auto side = j.at("side").get<std::string>();
  if (side != "source" && side != "target") throw std::invalid_argument("bad side '" + side + "'");
  return {side == "source" ? Side::Source : Side::Target, j.at("index").get<std::uint32_t>()};
}

std::string short_point(BoundaryPoint p) {
  return (p.side == Side::Source ? "s" : "t") + std::to_string(p.index);
}

}  // namespace

Json to_json(const ObjectSeq& a) {
  Json out = Json::array();
  for (auto s : a) out.push_back(s == Sign::Plus ? "+" : "-");
  return out;
}

Json to_json(const GCob& f, const Alphabet& al) {
  Json segs = Json::array();
  for (const auto& s : f.segments()) {
    segs.push_back({{"from", point(s.from)}, {"to", point(s.to)}, {"label", al.format(s.label)}});
  }
  Json circles = Json::array();
  for (const auto& c : f.circles()) circles.push_back(al.format(c.rep()));
  return {{"src", to_json(f.src())}, {"tgt", to_json(f.tgt())}, {"segments", segs}, {"circles", circles}};
}

Json to_json(const CobSum& x, const Alphabet& al) {
  Json terms = Json::array();
  for (const auto& [f, n] : x.terms()) terms.push_back({{"multiplicity", n}, {"cobordism", to_json(f, al)}});
  return {{"src", to_json(x.src())}, {"tgt", to_json(x.tgt())}, {"terms", terms}};
}

Json to_json(const MatArrow& m, const Alphabet& al) {
  Json rows = Json::array();
  for (const auto& a : m.tgt()) rows.push_back(to_json(a));
  Json cols = Json::array();
  for (const auto& a : m.src()) cols.push_back(to_json(a));
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j), al));
    entries.push_back(row);
  }
  return {{"schema", kSchemaVersion}, {"rows", rows}, {"cols", cols}, {"entries", entries}};
}

Json to_json(const MatrixForm& m, const Alphabet& al) {
  Json rows = Json::array();
  for (const auto& a : m.row_components) rows.push_back(print(a));
  Json cols = Json::array();
  for (const auto& a : m.col_components) cols.push_back(print(a));
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Json e = to_json(m.at(i, j), al);
      e.erase("schema");
      row.push_back(e);
    }
    entries.push_back(row);
  }
  return {{"schema", kSchemaVersion}, {"row_components", rows}, {"col_components", cols}, {"entries", entries}};
}

ObjectSeq object_seq_from_json(const Json& j) {
  ObjectSeq out;
  for (const auto& s : j) {
    const auto t = s.get<std::string>();
    if (t == "+") {
      out.push_back(Sign::Plus);
    } else if (t == "-") {
      out.push_back(Sign::Minus);
    } else {
      throw std::invalid_argument("bad sign '" + t + "'");
    }
  }
  return out;
}

GCob gcob_from_json(const Json& j, const Alphabet& al) {
  std::vector<Segment> segs;
  for (const auto& s : j.at("segments")) {
    segs.push_back({point_from(s.at("from")), point_from(s.at("to")), al.parse_word(s.at("label").get<std::string>())});
  }
  std::vector<CyclicWord> circles;
  for (const auto& c : j.at("circles")) circles.push_back(cyclic_canonical(al.parse_word(c.get<std::string>())));
  return GCob(object_seq_from_json(j.at("src")), object_seq_from_json(j.at("tgt")), std::move(segs),
              std::move(circles));
}

CobSum cobsum_from_json(const Json& j, const Alphabet& al) {
  CobSum out(object_seq_from_json(j.at("src")), object_seq_from_json(j.at("tgt")));
  for (const auto& t : j.at("terms")) {
    out.insert(gcob_from_json(t.at("cobordism"), al), t.at("multiplicity").get<std::uint64_t>());
  }
  return out;
}

std::string describe(const GCob& f, const Alphabet& al) {
  std::string out;
  for (const auto& s : f.segments()) {
    if (!out.empty()) out += "; ";
    out += short_point(s.from) + "\xE2\x86\x92" + short_point(s.to);
    if (!s.label.is_identity()) out += " " + al.format(s.label);
  }
  for (const auto& c : f.circles()) {
    if (!out.empty()) out += "; ";
    out += "\xE2\x97\x8B(" + al.format(c.rep()) + ")";
  }
  return out.empty() ? "empty" : out;
}

std::string describe(const CobSum& x, const Alphabet& al) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [f, n] : x.terms()) {
    if (!out.empty()) out += " + ";
    if (n > 1) out += std::to_string(n) + "\xC3\x97";
    out += "{" + describe(f, al) + "}";
  }
  return out;
}

}  // namespace dcc

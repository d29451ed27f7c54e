// JSON serialization: presentations, modules with exact fraction entries,
// and the report payloads the command line tool emits.  Words travel as
// strings in the documented grammar.

#ifndef STRALG_JSON_IO_HPP_
#define STRALG_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "bands.hpp"
#include "field.hpp"
#include "modules.hpp"
#include "presentation.hpp"
#include "ringel.hpp"

namespace stralg {

using nlohmann::json;

inline json to_json(AlgebraPresentation const& A) {
  json j;
  j["name"] = A.name();
  j["vertices"] = json::array();
  for (auto const& v : A.vertices()) j["vertices"].push_back(v.id);
  j["arrows"] = json::array();
  for (auto const& a : A.arrows())
    j["arrows"].push_back(
        {{"name", a.name}, {"source", a.source}, {"target", a.target}});
  j["relations"] = json::array();
  for (auto const& r : A.relations()) j["relations"].push_back(r);
  return j;
}

inline AlgebraPresentation presentation_from_json(json const& j) {
  std::vector<Vertex> vertices;
  for (auto const& v : j.at("vertices")) vertices.push_back({v.get<std::string>()});
  std::vector<Arrow> arrows;
  for (auto const& a : j.at("arrows"))
    arrows.push_back({a.at("name").get<std::string>(),
                      a.at("source").get<std::string>(),
                      a.at("target").get<std::string>()});
  std::vector<RelationPath> relations;
  for (auto const& r : j.at("relations"))
    relations.push_back(r.get<RelationPath>());
  return AlgebraPresentation(j.value("name", ""), std::move(vertices),
                             std::move(arrows), std::move(relations));
}

template <typename K>
json to_json(FDModule<K> const& M) {
  json dims = json::object(), mats = json::object();
  for (auto const& v : M.algebra().vertices()) dims[v.id] = M.dim(v.id);
  for (auto const& a : M.algebra().arrows()) {
    auto const& m = M.action(a.name);
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j)
        row.push_back(to_string(m(i, j)));
      rows.push_back(std::move(row));
    }
    mats[a.name] = std::move(rows);
  }
  return {{"dims", dims}, {"matrices", mats}};
}

template <typename K>
FDModule<K> module_from_json(AlgebraPresentation const& A, json const& j,
                             K (*parse)(std::string const&)) {
  std::map<std::string, std::size_t> dims;
  for (auto const& [v, d] : j.at("dims").items())
    dims[v] = d.template get<std::size_t>();
  std::map<std::string, Matrix<K>> mats;
  for (auto const& a : A.arrows()) {
    auto const& rows = j.at("matrices").at(a.name);
    Matrix<K> m(dims.at(a.target), dims.at(a.source));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t c = 0; c < m.cols(); ++c)
        m(i, c) = parse(rows.at(i).at(c).template get<std::string>());
    mats[a.name] = std::move(m);
  }
  return FDModule<K>(A, std::move(dims), std::move(mats));
}

inline Rational parse_rational(std::string const& s) {
  return rational_from_string(s);
}
inline Fp parse_fp(std::string const& s) { return fp_from_string(s); }

inline json to_json(BandSet const& bs, DomesticityResult const& dom) {
  json j;
  j["bands"] = json::array();
  for (auto const& b : bs.bands) j["bands"].push_back(b.str());
  j["truncated"] = bs.truncated;
  j["domestic"] = dom.domestic;
  if (dom.domestic) {
    j["n"] = dom.n;
  } else {
    auto word = [](std::vector<Letter> const& ls) {
      std::string out;
      for (auto const& l : ls) out += (out.empty() ? "" : " ") + l.str();
      return out;
    };
    j["witness"] = {word(dom.witness_a), word(dom.witness_b)};
  }
  return j;
}

inline json to_json(BridgeQuiver const& q) {
  json j;
  j["bands"] = json::array();
  for (auto const& b : q.bands) j["bands"].push_back(b.str());
  j["domestic"] = true;  // the bridge quiver only exists in that case
  j["n"] = q.bands.size() / 2;
  j["covers"] = json::array();
  for (auto const& c : q.covers) {
    std::string u;
    for (auto const& l : c.witness) u += (u.empty() ? "" : " ") + l.str();
    j["covers"].push_back({{"from", q.bands[c.from].str()},
                           {"to", q.bands[c.to].str()},
                           {"witness", u}});
  }
  return j;
}

inline json to_json(RingelDescriptor const& d) {
  json j;
  switch (d.kind) {
    case RingelDescriptor::Kind::FiniteString:
      j["kind"] = "finite";
      j["word"] = d.finite->str();
      j["anchor"] = d.finite->anchor();
      break;
    case RingelDescriptor::Kind::OneSidedString:
      j["kind"] = "one-sided";
      j["word"] = d.one_sided->str();
      j["anchor"] = d.one_sided->anchor();
      j["shape"] = RingelDescriptor::shape_name(*d.shape);
      j["periodic"] = *d.periodic;
      break;
    case RingelDescriptor::Kind::TwoSidedString:
      j["kind"] = "two-sided";
      j["word"] = d.two_sided->str();
      j["left_shape"] = RingelDescriptor::shape_name(d.shapes->left);
      j["right_shape"] = RingelDescriptor::shape_name(d.shapes->right);
      break;
    case RingelDescriptor::Kind::Prufer:
      j["kind"] = "prufer";
      j["band"] = d.band->str();
      j["lambda"] = *d.lambda;
      break;
    case RingelDescriptor::Kind::Adic:
      j["kind"] = "adic";
      j["band"] = d.band->str();
      j["lambda"] = *d.lambda;
      break;
    case RingelDescriptor::Kind::Generic:
      j["kind"] = "generic";
      j["band"] = d.band->str();
      break;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Word grammar used on the command line:
//   finite      letters separated by spaces, inversion as ^-1
//   one-sided   "prefix | (period)^inf"   (prefix possibly empty)
//   two-sided   "inf^(E) u' . v' (F)^inf" with the left half displayed
//               inverted, exactly as the strings are drawn

inline OneSidedWord parse_one_sided(AlgebraPresentation const& A,
                                    std::string const& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("one-sided word needs 'prefix | (period)^inf'");
  std::string pre = text.substr(0, bar), rest = text.substr(bar + 1);
  auto open = rest.find('('), close = rest.find(")^inf");
  if (open == std::string::npos || close == std::string::npos)
    throw std::invalid_argument("one-sided word needs '(period)^inf'");
  auto period_letters = parse_letters(rest.substr(open + 1, close - open - 1));
  if (period_letters.empty()) throw std::invalid_argument("empty period");
  FiniteWord period(A, left_vertex(A, period_letters[0]), period_letters);
  auto prefix_letters = parse_letters(pre);
  FiniteWord prefix =
      prefix_letters.empty()
          ? FiniteWord(period.anchor(), +1)
          : FiniteWord(A, left_vertex(A, prefix_letters[0]), prefix_letters);
  return OneSidedWord(A, prefix, period);
}

inline TwoSidedWord parse_two_sided(AlgebraPresentation const& A,
                                    HPartition const& H,
                                    std::string const& text) {
  std::string s = text;
  // strip an optional trailing anchor note "@v"
  if (auto at = s.rfind('@'); at != std::string::npos) s = s.substr(0, at);
  std::vector<Letter> left_period, right_period;
  if (auto p = s.find("inf^("); p != std::string::npos) {
    auto close = s.find(')', p);
    left_period = parse_letters(s.substr(p + 5, close - p - 5));
    s = s.substr(close + 1);
  }
  if (auto p = s.find("(" ); p != std::string::npos) {
    auto close = s.find(")^inf", p);
    if (close == std::string::npos)
      throw std::invalid_argument("right period must end with ')^inf'");
    right_period = parse_letters(s.substr(p + 1, close - p - 1));
    s = s.substr(0, p);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos)
    throw std::invalid_argument("two-sided word needs a '.' at the anchor");
  auto left_mid = parse_letters(s.substr(0, dot));
  auto right_mid = parse_letters(s.substr(dot + 1));

  // the left half is displayed inverted: flip it back
  auto flip = [](std::vector<Letter> ls) {
    std::reverse(ls.begin(), ls.end());
    for (auto& l : ls) l = l.inverse();
    return ls;
  };
  std::vector<Letter> lmid = flip(left_mid), lper = flip(left_period);

  std::optional<std::string> anchor;
  if (!lmid.empty())
    anchor = left_vertex(A, lmid[0]);
  else if (!lper.empty())
    anchor = left_vertex(A, lper[0]);
  if (!right_mid.empty())
    anchor = anchor ? anchor : left_vertex(A, right_mid[0]);
  else if (!right_period.empty())
    anchor = anchor ? anchor : left_vertex(A, right_period[0]);
  if (!anchor) throw std::invalid_argument("empty two-sided word");

  auto build_half = [&](std::vector<Letter> const& mid,
                        std::vector<Letter> const& per,
                        int sign) -> TwoSidedWord::Half {
    if (per.empty()) {
      if (mid.empty()) return FiniteWord(*anchor, sign);
      return FiniteWord(A, *anchor, mid);
    }
    FiniteWord prefix = mid.empty()
                            ? FiniteWord(left_vertex(A, per[0]), +1)
                            : FiniteWord(A, *anchor, mid);
    FiniteWord period(A, left_vertex(A, per[0]), per);
    return OneSidedWord(A, prefix, period);
  };
  // sides decide which half is u; signs for empty finite halves follow suit
  auto first_of = [&](std::vector<Letter> const& mid,
                      std::vector<Letter> const& per) -> std::optional<Letter> {
    if (!mid.empty()) return mid[0];
    if (!per.empty()) return per[0];
    return std::nullopt;
  };
  auto fl = first_of(lmid, lper);
  auto fr = first_of(right_mid, right_period);
  int lside = fl ? H.side(*anchor, *fl) : 0;
  int rside = fr ? H.side(*anchor, *fr) : 0;
  if (lside == 0) lside = -rside;
  if (rside == 0) rside = -lside;
  if (lside == rside)
    throw std::invalid_argument("both halves lie on one side of the partition");
  auto left_half = build_half(lmid, lper, lside);
  auto right_half = build_half(right_mid, right_period, rside);
  if (lside == -1) return TwoSidedWord(A, H, left_half, right_half);
  return TwoSidedWord(A, H, right_half, left_half);
}

}  // namespace stralg

#endif

#pragma once
// JSON conversion (nlohmann::json) and the small text formats used by the CLI.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "richardson/brsk.hpp"
#include "richardson/chains.hpp"
#include "richardson/error.hpp"
#include "richardson/multiplicity.hpp"
#include "richardson/tableau.hpp"

namespace richardson {

using nlohmann::json;

inline void to_json(json& j, const Point& p) { j = json::array({p.e, p.f}); }
inline void from_json(const json& j, Point& p) {
  detail::require(j.is_array() && j.size() == 2, "a point is a two-element array");
  p = {j.at(0).get<int>(), j.at(1).get<int>()};
  detail::check_key(p);
}

/// Sorted array of [e, f] with repetition.
inline void to_json(json& j, const MultisetNN2& u) {
  j = json::array();
  for (const auto& p : u.elements()) j.push_back(p);
}
inline void from_json(const json& j, MultisetNN2& u) {
  detail::require(j.is_array(), "a multiset is an array of [e, f] pairs");
  u = MultisetNN2{};
  for (const auto& item : j) u.insert(item.get<Point>());
}

inline void to_json(json& j, const NotchedTableau& t) { j = t.rows; }
inline void from_json(const json& j, NotchedTableau& t) {
  detail::require(j.is_array(), "a tableau is an array of rows");
  t.rows = j.get<std::vector<Row>>();
}

inline void to_json(json& j, const NotchedBitableau& bt) { j = json{{"P", bt.p()}, {"Q", bt.q()}}; }
inline void from_json(const json& j, NotchedBitableau& bt) {
  bt = NotchedBitableau(j.at("P").get<NotchedTableau>(), j.at("Q").get<NotchedTableau>());
}

inline void to_json(json& j, const BoxPos& b) { j = json::array({b.row, b.col}); }

inline void to_json(json& j, const BumpingRecord& r) { j = json{{"route", r.route}, {"new_box", r.new_box}}; }

inline void to_json(json& j, const BrskStep& s) {
  j = json{{"pair", s.pair}, {"route", s.record.route}, {"new_box", s.record.new_box}, {"bitableau", s.snapshot}};
}

inline void to_json(json& j, const TwistedChain& t) {
  j = json{{"sign", t.sign == Sign::negative ? "negative" : "positive"}, {"points", t.points}};
}

inline void to_json(json& j, const AnchoredPath& ap) { j = json{{"anchor", ap.anchor}, {"path", ap.path.points}}; }

// --------------------------------------------------------------------------
// Text formats

/// "1,2,3,5" → {1,2,3,5}.
[[nodiscard]] inline std::vector<int> parse_int_list(const std::string& s, char sep = ',') {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      detail::require(item.find_first_not_of(" \t", used) == std::string::npos, "bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw DomainError("bad integer '" + item + "'");
    }
  }
  return out;
}

/// "7,8 2,8 6,7" → {(7,8),(2,8),(6,7)}.
[[nodiscard]] inline MultisetNN2 parse_pairs(const std::string& s) {
  MultisetNN2 u;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    const auto v = parse_int_list(tok);
    detail::require(v.size() == 2, "pair '" + tok + "' must be e,f");
    u.insert({v[0], v[1]});
  }
  return u;
}

/// "1 2/2 3 4 7/6" → [[1,2],[2,3,4,7],[6]]; an empty segment is an empty row.
[[nodiscard]] inline NotchedTableau parse_tableau(const std::string& s) {
  NotchedTableau t;
  if (s.find_first_not_of(" \t") == std::string::npos) return t;
  std::size_t start = 0;
  while (true) {
    const auto slash = s.find('/', start);
    const std::string seg = s.substr(start, slash == std::string::npos ? std::string::npos : slash - start);
    t.rows.push_back(parse_int_list(seg, ' '));
    if (slash == std::string::npos) break;
    start = slash + 1;
  }
  return t;
}

}  // namespace richardson

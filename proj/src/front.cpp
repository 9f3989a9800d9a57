#include "rulinglab/front.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rulinglab {

namespace {

int delta(const FrontDiagram& d, const Event& e) {
  switch (e.kind) {
    case EventKind::LC: return 2;
    case EventKind::RC: return -2;
    case EventKind::X: return 0;
    case EventKind::V: return d.vertices[e.vid].rv - d.vertices[e.vid].lv;
  }
  return 0;
}

// spans in doubled coordinates: strand p -> 2p, gap before p -> 2p-1
struct Span {
  int lo, hi;
};

Span out_span(const FrontDiagram& d, const Event& e) {
  switch (e.kind) {
    case EventKind::LC: return {2 * e.pos, 2 * e.pos + 2};
    case EventKind::RC: return {2 * e.pos - 1, 2 * e.pos - 1};
    case EventKind::X: return {2 * e.pos, 2 * e.pos + 2};
    case EventKind::V: {
      int rv = d.vertices[e.vid].rv;
      if (rv == 0) return {2 * e.pos - 1, 2 * e.pos - 1};
      return {2 * e.pos, 2 * (e.pos + rv - 1)};
    }
  }
  return {0, 0};
}

Span in_span(const FrontDiagram& d, const Event& e) {
  switch (e.kind) {
    case EventKind::LC: return {2 * e.pos - 1, 2 * e.pos - 1};
    case EventKind::RC: return {2 * e.pos, 2 * e.pos + 2};
    case EventKind::X: return {2 * e.pos, 2 * e.pos + 2};
    case EventKind::V: {
      int lv = d.vertices[e.vid].lv;
      if (lv == 0) return {2 * e.pos - 1, 2 * e.pos - 1};
      return {2 * e.pos, 2 * (e.pos + lv - 1)};
    }
  }
  return {0, 0};
}

// e1 immediately before e2: disjoint supports on the middle slice
bool commutes(const FrontDiagram& d, const Event& e1, const Event& e2) {
  Span s1 = out_span(d, e1), s2 = in_span(d, e2);
  return s1.hi < s2.lo || s2.hi < s1.lo;
}

// swap a commuting adjacent pair, adjusting positions
std::pair<Event, Event> swapped(const FrontDiagram& d, const Event& e1, const Event& e2) {
  Span s1 = out_span(d, e1), s2 = in_span(d, e2);
  Event a = e2, b = e1;
  if (s2.hi < s1.lo) {
    b.pos += delta(d, e2);  // e2 above: e1 shifts by e2's strand delta
  } else {
    a.pos -= delta(d, e1);  // e2 below: undo e1's shift
  }
  return {a, b};
}

std::string events_key(const FrontDiagram& d) {
  std::ostringstream os;
  for (const auto& e : d.events)
    os << (int)e.kind << ":" << e.pos << ":" << e.marked << ":" << e.vid << ";";
  return os.str();
}

}  // namespace

std::vector<int> FrontDiagram::strand_counts() const {
  std::vector<int> out;
  out.reserve(events.size() + 1);
  int n = left;
  out.push_back(n);
  for (const auto& e : events) {
    n += delta(*this, e);
    out.push_back(n);
  }
  return out;
}

std::vector<std::string> FrontDiagram::validate() const {
  std::vector<std::string> errs;
  auto err = [&](size_t i, const std::string& m) {
    std::ostringstream os;
    os << "event " << i + 1 << ": " << m;
    errs.push_back(os.str());
  };
  if (left < 0 || right < 0) errs.push_back("negative border size");
  int n = left;
  for (size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    if (e.pos < 1) err(i, "position must be >= 1");
    switch (e.kind) {
      case EventKind::LC:
        if (e.pos > n + 1) err(i, "left cusp position out of range");
        n += 2;
        break;
      case EventKind::RC:
        if (e.pos + 1 > n) err(i, "right cusp position out of range");
        n -= 2;
        break;
      case EventKind::X:
        if (e.pos + 1 > n) err(i, "crossing position out of range");
        break;
      case EventKind::V: {
        if (e.vid < 0 || e.vid >= (int)vertices.size()) {
          err(i, "bad vertex id");
          break;
        }
        const VertexInfo& v = vertices[e.vid];
        if (v.lv < 0 || v.rv < 0 || v.lv + v.rv < 2 || (v.lv + v.rv) % 2 != 0)
          err(i, "vertex valence must be even and >= 2");
        if (v.lv > 0 && e.pos + v.lv - 1 > n) err(i, "vertex position out of range");
        if (v.lv == 0 && e.pos > n + 1) err(i, "vertex position out of range");
        n += v.rv - v.lv;
        break;
      }
    }
    if (e.marked && e.kind != EventKind::X) err(i, "only crossings can be marked");
  }
  if (n != right) {
    std::ostringstream os;
    os << "final strand count " << n << " != right border " << right;
    errs.push_back(os.str());
  }
  // every vertex referenced exactly once
  std::vector<int> uses(vertices.size(), 0);
  for (const auto& e : events)
    if (e.kind == EventKind::V && e.vid >= 0 && e.vid < (int)vertices.size()) uses[e.vid]++;
  for (size_t v = 0; v < uses.size(); ++v)
    if (uses[v] != 1) {
      std::ostringstream os;
      os << "vertex " << v << " referenced " << uses[v] << " times";
      errs.push_back(os.str());
    }
  return errs;
}

std::string FrontDiagram::to_text() const {
  std::ostringstream os;
  os << "type " << left << " " << right << "\n";
  for (const auto& e : events) {
    switch (e.kind) {
      case EventKind::LC: os << "LC " << e.pos; break;
      case EventKind::RC: os << "RC " << e.pos; break;
      case EventKind::X:
        os << "X " << e.pos;
        if (e.marked) os << " marked";
        break;
      case EventKind::V: {
        const VertexInfo& v = vertices[e.vid];
        os << "V " << e.pos << " " << v.lv << " " << v.rv;
        if (!v.name.empty()) os << " id=" << v.name;
        break;
      }
    }
    os << "\n";
  }
  return os.str();
}

FrontDiagram FrontDiagram::from_text(const std::string& s) {
  FrontDiagram d;
  std::istringstream is(s);
  std::string line;
  bool saw_type = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto fail = [&](const std::string& m) {
      std::ostringstream os;
      os << "line " << lineno << ": " << m;
      throw std::invalid_argument(os.str());
    };
    if (!saw_type) {
      if (tok != "type") fail("expected 'type <l> <r>'");
      if (!(ls >> d.left >> d.right)) fail("expected 'type <l> <r>'");
      saw_type = true;
      continue;
    }
    if (tok == "LC" || tok == "RC" || tok == "X") {
      int p;
      if (!(ls >> p)) fail("expected position");
      Event e = tok == "LC" ? Event::lc(p) : tok == "RC" ? Event::rc(p) : Event::x(p);
      std::string extra;
      if (ls >> extra) {
        if (tok == "X" && extra == "marked")
          e.marked = true;
        else
          fail("unexpected token '" + extra + "'");
      }
      d.events.push_back(e);
    } else if (tok == "V") {
      int p, lv, rv;
      if (!(ls >> p >> lv >> rv)) fail("expected 'V <p> <lv> <rv>'");
      VertexInfo v{lv, rv, ""};
      std::string extra;
      if (ls >> extra) {
        if (extra.rfind("id=", 0) == 0)
          v.name = extra.substr(3);
        else
          fail("unexpected token '" + extra + "'");
      }
      d.events.push_back(Event::v(p, (int)d.vertices.size()));
      d.vertices.push_back(v);
    } else {
      fail("unknown event '" + tok + "'");
    }
  }
  if (!saw_type) throw std::invalid_argument("missing 'type' line");
  return d;
}

std::string FrontDiagram::to_json() const {
  nlohmann::json j;
  j["type"] = {left, right};
  j["events"] = nlohmann::json::array();
  for (const auto& e : events) {
    nlohmann::json je;
    switch (e.kind) {
      case EventKind::LC: je["kind"] = "LC"; break;
      case EventKind::RC: je["kind"] = "RC"; break;
      case EventKind::X:
        je["kind"] = "X";
        if (e.marked) je["marked"] = true;
        break;
      case EventKind::V: {
        const VertexInfo& v = vertices[e.vid];
        je["kind"] = "V";
        je["lv"] = v.lv;
        je["rv"] = v.rv;
        if (!v.name.empty()) je["id"] = v.name;
        break;
      }
    }
    je["pos"] = e.pos;
    j["events"].push_back(je);
  }
  return j.dump(2);
}

FrontDiagram FrontDiagram::from_json(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  FrontDiagram d;
  d.left = j.at("type").at(0).get<int>();
  d.right = j.at("type").at(1).get<int>();
  for (const auto& je : j.at("events")) {
    std::string k = je.at("kind").get<std::string>();
    int p = je.at("pos").get<int>();
    if (k == "LC") {
      d.events.push_back(Event::lc(p));
    } else if (k == "RC") {
      d.events.push_back(Event::rc(p));
    } else if (k == "X") {
      d.events.push_back(Event::x(p, je.value("marked", false)));
    } else if (k == "V") {
      VertexInfo v{je.at("lv").get<int>(), je.at("rv").get<int>(), je.value("id", "")};
      d.events.push_back(Event::v(p, (int)d.vertices.size()));
      d.vertices.push_back(v);
    } else {
      throw std::invalid_argument("unknown event kind '" + k + "'");
    }
  }
  return d;
}

FrontDiagram FrontDiagram::normal_form() const {
  FrontDiagram d = *this;
  size_t n = d.events.size();
  size_t cap = 4 * n * n + 16;
  bool changed = true;
  while (changed && cap-- > 0) {
    changed = false;
    for (size_t i = 0; i + 1 < n; ++i) {
      const Event& e1 = d.events[i];
      const Event& e2 = d.events[i + 1];
      if (!commutes(d, e1, e2)) continue;
      // pull the upper event earlier
      if (in_span(d, e2).hi < out_span(d, e1).lo) {
        auto [a, b] = swapped(d, e1, e2);
        d.events[i] = a;
        d.events[i + 1] = b;
        changed = true;
      }
    }
  }
  return d;
}

bool FrontDiagram::same_up_to_commutation(const FrontDiagram& o) const {
  if (left != o.left || right != o.right || vertices != o.vertices) return false;
  FrontDiagram a = normal_form(), b = o.normal_form();
  if (a.events == b.events) return true;
  // best-effort BFS over single commutations (small diagrams)
  std::set<std::string> seen;
  std::queue<FrontDiagram> q;
  std::string target = events_key(b);
  q.push(a);
  seen.insert(events_key(a));
  size_t budget = 100000;
  while (!q.empty() && budget-- > 0) {
    FrontDiagram cur = q.front();
    q.pop();
    for (size_t i = 0; i + 1 < cur.events.size(); ++i) {
      if (!commutes(cur, cur.events[i], cur.events[i + 1])) continue;
      FrontDiagram nxt = cur;
      auto [x, y] = swapped(cur, cur.events[i], cur.events[i + 1]);
      nxt.events[i] = x;
      nxt.events[i + 1] = y;
      std::string k = events_key(nxt);
      if (k == target) return true;
      if (seen.insert(k).second) q.push(nxt);
    }
  }
  return false;
}

FrontDiagram concatenate(const FrontDiagram& d1, const FrontDiagram& d2) {
  if (d1.right != d2.left)
    throw std::invalid_argument("concatenate: border mismatch");
  FrontDiagram d = d1;
  int shift = (int)d1.vertices.size();
  for (Event e : d2.events) {
    if (e.kind == EventKind::V) e.vid += shift;
    d.events.push_back(e);
  }
  for (const auto& v : d2.vertices) d.vertices.push_back(v);
  d.right = d2.right;
  return d;
}

FrontDiagram close_diagram(const FrontDiagram& d) {
  FrontDiagram out = d;
  if (d.left > 0) {
    int vid = (int)out.vertices.size();
    out.vertices.push_back({0, d.left, "0"});
    out.events.insert(out.events.begin(), Event::v(1, vid));
    out.left = 0;
  }
  if (d.right > 0) {
    int vid = (int)out.vertices.size();
    out.vertices.push_back({d.right, 0, "inf"});
    out.events.push_back(Event::v(1, vid));
    out.right = 0;
  }
  return out;
}

ArcMap build_arcs(const FrontDiagram& d) {
  ArcMap m;
  m.arc_at.resize(d.events.size() + 1);
  m.event_arcs.resize(d.events.size());
  std::vector<int> cur;
  for (int i = 0; i < d.left; ++i) cur.push_back(m.num_arcs++);
  m.left_border = cur;
  m.arc_at[0] = cur;
  for (size_t i = 0; i < d.events.size(); ++i) {
    const Event& e = d.events[i];
    int p = e.pos - 1;  // 0-based
    switch (e.kind) {
      case EventKind::LC: {
        int up = m.num_arcs++, lo = m.num_arcs++;
        cur.insert(cur.begin() + p, {up, lo});
        m.event_arcs[i].arcs = {up, lo};
        break;
      }
      case EventKind::RC: {
        m.event_arcs[i].arcs = {cur[p], cur[p + 1]};
        cur.erase(cur.begin() + p, cur.begin() + p + 2);
        break;
      }
      case EventKind::X: {
        m.event_arcs[i].arcs = {cur[p], cur[p + 1]};
        std::swap(cur[p], cur[p + 1]);
        break;
      }
      case EventKind::V: {
        const VertexInfo& v = d.vertices[e.vid];
        std::vector<int> inc;
        std::vector<int> outs;
        for (int k = 0; k < v.rv; ++k) outs.push_back(m.num_arcs++);
        inc = outs;  // labels 1..rv
        for (int k = 0; k < v.lv; ++k) inc.push_back(cur[p + k]);  // rv+1..rv+lv
        m.event_arcs[i].arcs = inc;
        cur.erase(cur.begin() + p, cur.begin() + p + v.lv);
        cur.insert(cur.begin() + p, outs.begin(), outs.end());
        break;
      }
    }
    m.arc_at[i + 1] = cur;
  }
  m.right_border = cur;
  return m;
}

// ---- moves ------------------------------------------------------------

namespace {

bool is_x(const Event& e, int p) { return e.kind == EventKind::X && e.pos == p; }
bool is_ux(const Event& e, int p) { return is_x(e, p) && !e.marked; }

}  // namespace

std::vector<MoveSite> enumerate_moves(const FrontDiagram& d) {
  std::vector<MoveSite> out;
  std::vector<int> counts = d.strand_counts();
  const auto& ev = d.events;
  int n = (int)ev.size();
  for (int i = 0; i < n; ++i) {
    const Event& e = ev[i];
    if (i + 1 < n && commutes(d, e, ev[i + 1])) out.push_back({"0", i, true});
    if (e.kind == EventKind::LC) {
      if (e.pos >= 2) out.push_back({"IIa", i, true});
      if (counts[i] >= e.pos) out.push_back({"IIb", i, true});
      if (i + 1 < n && ev[i + 1].kind == EventKind::X && ev[i + 1].marked &&
          std::abs(ev[i + 1].pos - e.pos) == 1)
        out.push_back({"SL", i, true});
      if (i + 2 < n && is_ux(ev[i + 1], e.pos + 1) && is_ux(ev[i + 2], e.pos))
        out.push_back({"IIa", i, false});
      if (i + 2 < n && e.pos >= 2 && is_ux(ev[i + 1], e.pos - 1) && is_ux(ev[i + 2], e.pos))
        out.push_back({"IIb", i, false});
    }
    if (e.kind == EventKind::RC) {
      if (e.pos >= 2) out.push_back({"IIc", i, true});
      if (counts[i] >= e.pos + 2) out.push_back({"IId", i, true});
    }
    if (e.kind == EventKind::X) {
      if (i + 1 < n && e.marked && ev[i + 1].kind == EventKind::RC &&
          std::abs(ev[i + 1].pos - e.pos) == 1)
        out.push_back({"SR", i, true});
      if (i + 2 < n && is_ux(ev[i + 1], e.pos + 1) && ev[i + 2].kind == EventKind::RC &&
          ev[i + 2].pos == e.pos && !e.marked)
        out.push_back({"IIc", i, false});
      if (i + 2 < n && is_ux(ev[i + 1], e.pos - 1) && ev[i + 2].kind == EventKind::RC &&
          ev[i + 2].pos == e.pos && !e.marked)
        out.push_back({"IId", i, false});
      if (i + 2 < n && ev[i + 1].kind == EventKind::X && ev[i + 2].kind == EventKind::X) {
        int q = e.pos;
        if ((ev[i + 1].pos == q + 1 && ev[i + 2].pos == q) ||
            (q >= 2 && ev[i + 1].pos == q - 1 && ev[i + 2].pos == q))
          out.push_back({"III", i, true});
        if (is_x(ev[i + 1], q) && is_x(ev[i + 2], q)) {
          if (e.marked && ev[i + 1].marked) out.push_back({"T", i, true});
          if (ev[i + 1].marked && ev[i + 2].marked) out.push_back({"T", i, false});
        }
      }
    }
  }
  return out;
}

FrontDiagram apply_move(const FrontDiagram& d, const MoveSite& site) {
  FrontDiagram out = d;
  auto& ev = out.events;
  int i = site.slice;
  int n = (int)ev.size();
  auto fail = [&](const std::string& m) {
    throw std::invalid_argument("apply_move(" + site.move + "): " + m);
  };
  auto need = [&](bool c, const std::string& m) {
    if (!c) fail(m);
  };
  need(i >= 0 && i < n, "slice out of range");
  std::vector<int> counts = d.strand_counts();
  if (site.move == "0") {
    need(i + 1 < n && commutes(d, ev[i], ev[i + 1]), "events do not commute");
    auto [a, b] = swapped(d, ev[i], ev[i + 1]);
    ev[i] = a;
    ev[i + 1] = b;
  } else if (site.move == "IIa" || site.move == "IIb") {
    if (site.forward) {
      need(ev[i].kind == EventKind::LC, "expected left cusp");
      int p = ev[i].pos;
      if (site.move == "IIa") {
        need(p >= 2, "no strand above the cusp");
        ev[i] = Event::lc(p - 1);
        ev.insert(ev.begin() + i + 1, {Event::x(p), Event::x(p - 1)});
      } else {
        need(counts[i] >= p, "no strand below the cusp");
        ev[i] = Event::lc(p + 1);
        ev.insert(ev.begin() + i + 1, {Event::x(p), Event::x(p + 1)});
      }
    } else {
      need(i + 2 < n && ev[i].kind == EventKind::LC, "pattern mismatch");
      int q = ev[i].pos;
      int dq = site.move == "IIa" ? 1 : -1;
      need(is_ux(ev[i + 1], q + dq) && is_ux(ev[i + 2], q), "pattern mismatch");
      ev[i] = Event::lc(q + dq);
      ev.erase(ev.begin() + i + 1, ev.begin() + i + 3);
    }
  } else if (site.move == "IIc" || site.move == "IId") {
    if (site.forward) {
      need(ev[i].kind == EventKind::RC, "expected right cusp");
      int p = ev[i].pos;
      if (site.move == "IIc") {
        need(p >= 2, "no strand above the cusp");
        ev[i] = Event::x(p - 1);
        ev.insert(ev.begin() + i + 1, {Event::x(p), Event::rc(p - 1)});
      } else {
        need(counts[i] >= p + 2, "no strand below the cusp");
        ev[i] = Event::x(p + 1);
        ev.insert(ev.begin() + i + 1, {Event::x(p), Event::rc(p + 1)});
      }
    } else {
      need(i + 2 < n && ev[i].kind == EventKind::X && !ev[i].marked, "pattern mismatch");
      int q = ev[i].pos;
      int dq = site.move == "IIc" ? 1 : -1;
      need(is_ux(ev[i + 1], q + dq) && ev[i + 2].kind == EventKind::RC &&
               ev[i + 2].pos == q,
           "pattern mismatch");
      ev[i] = dq == 1 ? Event::rc(q + 1) : Event::rc(q - 1);
      ev.erase(ev.begin() + i + 1, ev.begin() + i + 3);
    }
  } else if (site.move == "III") {
    need(i + 2 < n && ev[i].kind == EventKind::X && ev[i + 1].kind == EventKind::X &&
             ev[i + 2].kind == EventKind::X,
         "pattern mismatch");
    int q = ev[i].pos, r = ev[i + 1].pos;
    need(ev[i + 2].pos == q && std::abs(r - q) == 1, "pattern mismatch");
    bool ma = ev[i].marked, mb = ev[i + 1].marked, mc = ev[i + 2].marked;
    ev[i] = Event::x(r, mc);
    ev[i + 1] = Event::x(q, mb);
    ev[i + 2] = Event::x(r, ma);
  } else if (site.move == "SL") {
    // a marked crossing slides past a left cusp; only marked crossings may
    // do this (plain crossings cannot cross a cusp tip)
    need(i + 1 < n && ev[i].kind == EventKind::LC && ev[i + 1].kind == EventKind::X,
         "pattern mismatch");
    need(ev[i + 1].marked, "crossing must be marked");
    int a = ev[i].pos, b = ev[i + 1].pos;
    need(std::abs(a - b) == 1, "crossing not adjacent to cusp");
    ev[i] = Event::lc(b);
    ev[i + 1] = Event::x(a, true);
  } else if (site.move == "SR") {
    need(i + 1 < n && ev[i].kind == EventKind::X && ev[i + 1].kind == EventKind::RC,
         "pattern mismatch");
    need(ev[i].marked, "crossing must be marked");
    int a = ev[i].pos, b = ev[i + 1].pos;
    need(std::abs(a - b) == 1, "crossing not adjacent to cusp");
    ev[i] = Event::x(b, true);
    ev[i + 1] = Event::rc(a);
  } else if (site.move == "T") {
    need(i + 2 < n, "pattern mismatch");
    int q = ev[i].pos;
    need(is_x(ev[i], q) && is_x(ev[i + 1], q) && is_x(ev[i + 2], q), "pattern mismatch");
    if (site.forward) {
      need(ev[i].marked && ev[i + 1].marked, "need two leading marked crossings");
      std::rotate(ev.begin() + i, ev.begin() + i + 2, ev.begin() + i + 3);
    } else {
      need(ev[i + 1].marked && ev[i + 2].marked, "need two trailing marked crossings");
      std::rotate(ev.begin() + i, ev.begin() + i + 1, ev.begin() + i + 3);
    }
  } else {
    fail("unknown move");
  }
  auto errs = out.validate();
  if (!errs.empty()) fail("result invalid: " + errs.front());
  return out;
}

// ---- Ng resolution ----------------------------------------------------

NgResolution ng_resolution(const FrontDiagram& d) {
  if (d.left != 0 || d.right != 0)
    throw std::invalid_argument("ng_resolution: diagram must be closed");
  NgResolution r;
  std::vector<int> wires;
  // cap halves of left-cusp edges: 't'/'b' until consumed, 'n' otherwise
  std::vector<char> halves;
  // first consumption of a cap half fixes the canonical traversal end:
  // top half first -> top-to-bottom cap (+180 deg), bottom half -> -180
  auto consume = [&](int w, int site, int slot) {
    if (halves[w] == 'n') return;
    auto [it, fresh] = r.turns.try_emplace(
        wires[w], EdgeTurn{site, slot, halves[w] == 't' ? 4 : -4});
    (void)it;
    (void)fresh;
  };
  for (size_t i = 0; i < d.events.size(); ++i) {
    const Event& e = d.events[i];
    int p = e.pos - 1;  // 0-based
    switch (e.kind) {
      case EventKind::LC: {
        int a = r.pd.fresh_edge();
        wires.insert(wires.begin() + p, {a, a});
        halves.insert(halves.begin() + p, {'t', 'b'});
        break;
      }
      case EventKind::RC: {
        // negative kink: the loop sits on the right of the cusp
        int el = r.pd.fresh_edge();
        int cr = (int)r.pd.crossings.size();
        consume(p, cr, 3);
        consume(p + 1, cr, 2);
        r.pd.crossings.push_back({{el, el, wires[p + 1], wires[p]}, false});
        r.crossing_source.push_back((int)i);
        r.turns[el] = EdgeTurn{cr, 0, -4};  // clockwise loop east of the kink
        wires.erase(wires.begin() + p, wires.begin() + p + 2);
        halves.erase(halves.begin() + p, halves.begin() + p + 2);
        break;
      }
      case EventKind::X: {
        int c = r.pd.fresh_edge(), dd = r.pd.fresh_edge();
        int cr = (int)r.pd.crossings.size();
        consume(p, cr, 3);
        consume(p + 1, cr, 2);
        // descending strand (in-top to out-bottom) stays on top
        r.pd.crossings.push_back({{c, dd, wires[p + 1], wires[p]}, false});
        r.crossing_source.push_back((int)i);
        wires[p] = c;
        wires[p + 1] = dd;
        halves[p] = halves[p + 1] = 'n';
        break;
      }
      case EventKind::V: {
        const VertexInfo& v = d.vertices[e.vid];
        PDNode node;
        std::vector<int> outs;
        for (int k = 0; k < v.rv; ++k) outs.push_back(r.pd.fresh_edge());
        node.legs = outs;  // out-edges top-down ...
        for (int k = v.lv - 1; k >= 0; --k) node.legs.push_back(wires[p + k]);
        // ... then in-edges bottom-up: clockwise around the node
        node.east = v.rv;
        r.pd.nodes.push_back(node);
        r.node_source.push_back((int)i);
        // cap edges swallowed by a node get no turn record (nodes are only
        // traced for writhe, never for disk boundaries)
        wires.erase(wires.begin() + p, wires.begin() + p + v.lv);
        wires.insert(wires.begin() + p, outs.begin(), outs.end());
        halves.erase(halves.begin() + p, halves.begin() + p + v.lv);
        halves.insert(halves.begin() + p, v.rv, 'n');
        break;
      }
    }
  }
  if (!wires.empty())
    throw std::logic_error("ng_resolution: dangling wires on a closed diagram");
  return r;
}

}  // namespace rulinglab

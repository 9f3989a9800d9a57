// Bordered front diagrams as slice words.
//
// A diagram of type (l, r) is an ordered list of events read left to right;
// positions are 1-based from the top strand.  Events: LC p (left cusp
// inserting strands at p, p+1), RC p (right cusp removing p, p+1), X p
// (crossing of p, p+1, optionally marked), V p (even-valent vertex consuming
// lv strands at p.. and emitting rv strands at p).  Vertex half-edges are
// labeled right 1..rv top-down, then left rv+1..rv+lv top-down.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rulinglab/pd.hpp"

namespace rulinglab {

enum class EventKind : uint8_t { LC, RC, X, V };

struct Event {
  EventKind kind;
  int pos = 1;          // 1-based from the top
  bool marked = false;  // crossings only
  int vid = -1;         // index into FrontDiagram::vertices, crossings -1

  static Event lc(int p) { return {EventKind::LC, p, false, -1}; }
  static Event rc(int p) { return {EventKind::RC, p, false, -1}; }
  static Event x(int p, bool m = false) { return {EventKind::X, p, m, -1}; }
  static Event v(int p, int vid) { return {EventKind::V, p, false, vid}; }

  bool operator==(const Event&) const = default;
};

struct VertexInfo {
  int lv = 0;  // strands consumed (left half-edges)
  int rv = 0;  // strands emitted (right half-edges)
  std::string name;  // optional id from input files
  bool operator==(const VertexInfo&) const = default;
};

struct FrontDiagram {
  int left = 0;   // number of left border points
  int right = 0;  // number of right border points
  std::vector<Event> events;
  std::vector<VertexInfo> vertices;

  bool operator==(const FrontDiagram&) const = default;

  // strand count before event i, for i = 0..events.size() (last = after all)
  std::vector<int> strand_counts() const;

  // empty list means valid
  std::vector<std::string> validate() const;
  bool ok() const { return validate().empty(); }

  std::string to_text() const;
  std::string to_json() const;
  static FrontDiagram from_text(const std::string& s);
  static FrontDiagram from_json(const std::string& s);

  // canonical commutation normal form: bubble-sort adjacent commuting events
  FrontDiagram normal_form() const;
  bool same_up_to_commutation(const FrontDiagram& o) const;
};

// r(d1) must equal l(d2); vertex ids of d2 are re-indexed
FrontDiagram concatenate(const FrontDiagram& d1, const FrontDiagram& d2);

// glue 0_l on the left and infinity_r on the right: prepends a (0,l) vertex
// and appends an (r,0) vertex; no-op on closed diagrams
FrontDiagram close_diagram(const FrontDiagram& d);

// ---- arcs -------------------------------------------------------------
// Arcs are maximal strand pieces between cusps/vertices/borders; crossings
// do not break arcs.  arc_at[g][s] = arc id on strand position s+1 in the
// gap before event g (gap events.size() = after the last event).
struct ArcMap {
  int num_arcs = 0;
  std::vector<std::vector<int>> arc_at;
  // per cusp event index: [upper arc, lower arc]
  // per vertex event index: incident arcs by half-edge label 1..val
  struct EventArcs {
    std::vector<int> arcs;
  };
  std::vector<EventArcs> event_arcs;  // parallel to events
  std::vector<int> left_border;       // arcs at the left border, top-down
  std::vector<int> right_border;
};

ArcMap build_arcs(const FrontDiagram& d);

// ---- moves ------------------------------------------------------------
// Implemented subset: distant-event commutations (0), Reidemeister (II)
// cusp-strand transpositions, (III) triple-crossing slides with marking
// transport, (S) crossing-past-cusp slides, and (T) marked sigma^2 blocks
// commuting with a crossing on the same pair of strands.
struct MoveSite {
  std::string move;  // "0", "II+", "II-", "III", "S", "T"
  int slice = 0;     // index of the leftmost event of the pattern
  bool forward = true;  // pattern direction (insert vs remove, etc.)
};

std::vector<MoveSite> enumerate_moves(const FrontDiagram& d);
// throws std::invalid_argument if the pattern does not match at the site
FrontDiagram apply_move(const FrontDiagram& d, const MoveSite& site);

// ---- Ng resolution ----------------------------------------------------
// Left cusps become arcs, right cusps become (negative) kinks, crossings keep
// the descending strand on top, vertices become rigid nodes with legs in
// clockwise order (out-edges top-down, then in-edges bottom-up).
// The i-th crossing/kink of the PD corresponds to crossing_source[i], the
// index of the originating event (RC events give kinks).
// in-arc turning of a bent edge (left-cusp cap or kink loop), in 45-degree
// units, measured when the traversal starts by exiting (site, slot); the
// reverse traversal negates it.  Straight wire edges carry no record.
struct EdgeTurn {
  int site = -1;
  int slot = -1;
  int interior = 0;
};

struct NgResolution {
  PDDiagram pd;
  std::vector<int> crossing_source;
  std::vector<int> node_source;  // event index per node
  std::map<int, EdgeTurn> turns;
};

NgResolution ng_resolution(const FrontDiagram& d);

}  // namespace rulinglab

#include "rigidity/pebble_game.hpp"

#include <algorithm>
#include <string>

#include "rigidity/error.hpp"

namespace rigidity {

namespace {

std::uint64_t edge_key(Edge e) {
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

}  // namespace

RigidityOracle::RigidityOracle(std::size_t vertex_count)
    : n_(vertex_count),
      out_(vertex_count),
      out_count_(vertex_count, 0),
      parent_(vertex_count, 0),
      seen_(vertex_count, 0) {}

void RigidityOracle::add_out(VertexId tail, VertexId head) {
  out_[tail][out_count_[tail]++] = head;
}

void RigidityOracle::remove_out(VertexId tail, VertexId head) {
  auto& slots = out_[tail];
  if (slots[0] == head) slots[0] = slots[1];
  --out_count_[tail];
}

// Depth-first search along edge orientations for a free pebble reachable from
// `target`, never touching `target` or `keep`. On success the path is
// reversed, moving one pebble onto `target`.
bool RigidityOracle::gather_pebble(VertexId target, VertexId keep) {
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  seen_[target] = stamp_;
  seen_[keep] = stamp_;
  stack_.clear();
  stack_.push_back(target);
  while (!stack_.empty()) {
    const VertexId x = stack_.back();
    stack_.pop_back();
    for (std::uint8_t i = 0; i < out_count_[x]; ++i) {
      const VertexId y = out_[x][i];
      if (seen_[y] == stamp_) continue;
      seen_[y] = stamp_;
      parent_[y] = x;
      if (out_count_[y] < 2) {
        // Reverse target -> ... -> y so that y pins one more edge.
        for (VertexId w = y; w != target;) {
          const VertexId p = parent_[w];
          remove_out(p, w);
          add_out(w, p);
          w = p;
        }
        return true;
      }
      stack_.push_back(y);
    }
  }
  return false;
}

bool RigidityOracle::insert(Edge e) {
  if (e.u >= n_ || e.v >= n_) {
    throw Error(Errc::kIndexOutOfRange,
                "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                    ") outside a " + std::to_string(n_) + "-vertex oracle");
  }
  if (e.u == e.v) throw Error(Errc::kLoopEdge, "loop at vertex " + std::to_string(e.u));
  e = Edge::between(e.u, e.v);
  if (!processed_.insert(edge_key(e)).second) {
    throw Error(Errc::kDuplicateInsert, "edge (" + std::to_string(e.u) + ", " +
                                            std::to_string(e.v) + ") already processed");
  }

  while (free_pebbles(e.u) < 2 && gather_pebble(e.u, e.v)) {
  }
  while (free_pebbles(e.v) < 2 && gather_pebble(e.v, e.u)) {
  }
  if (free_pebbles(e.u) + free_pebbles(e.v) < 4) {
    rejected_.push_back(e);
    return false;
  }
  add_out(e.u, e.v);
  accepted_.push_back(e);
  return true;
}

}  // namespace rigidity

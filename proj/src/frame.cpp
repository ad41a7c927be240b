#include "condalg/frame.hpp"

#include <algorithm>
#include <string>

namespace condalg {

TFrame::TFrame(int point_count, std::vector<Triple> triples)
    : point_count_(point_count), triples_(std::move(triples)) {
  if (point_count < 0 || point_count > kMaxPoints)
    throw InputError("point count " + std::to_string(point_count) +
                     " outside supported range [0, " +
                     std::to_string(kMaxPoints) + "]");
  for (const Triple& t : triples_) {
    if (t.x < 0 || t.x >= point_count_ || t.y < 0 || t.y >= point_count_ ||
        t.mid > full())
      throw InputError("triple out of range");
  }
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()),
                 triples_.end());
  img_.assign(static_cast<std::size_t>(point_count_) << point_count_, 0);
  for (const Triple& t : triples_)
    img_[(static_cast<std::size_t>(t.x) << point_count_) | t.mid] |=
        PointSet{1} << t.y;
}

bool TFrame::upward_closed() const {
  for (const Triple& t : triples_)
    for (PointSet U = 0; U <= full(); ++U)
      if ((t.mid & U) == t.mid && !has(t.x, U, t.y)) return false;
  return true;
}

TFrame upward_closure(const TFrame& f) {
  std::vector<Triple> out;
  for (int x = 0; x < f.points(); ++x) {
    for (PointSet U = 0; U <= f.full(); ++U) {
      PointSet ys = 0;
      for (PointSet Z = U;; Z = (Z - 1) & U) {  // all subsets of U
        ys |= f.image(x, Z);
        if (Z == 0) break;
      }
      for (int y = 0; y < f.points(); ++y)
        if (ys >> y & 1) out.push_back(Triple{x, U, y});
    }
  }
  return TFrame(f.points(), std::move(out));
}

CondAlg cm(const TFrame& f) {
  const int m = f.points();
  const FinBoolAlg B(m);
  const bool closed = f.upward_closed();
  std::vector<Elem> table;
  table.reserve(static_cast<std::size_t>(B.size()) * B.size());
  for (PointSet U = 0; U < B.size(); ++U) {
    for (PointSet V = 0; V < B.size(); ++V) {
      Elem val = 0;
      for (int x = 0; x < m; ++x) {
        bool in = true;
        for (PointSet Z = U;; Z = (Z - 1) & U) {
          if ((f.image(x, Z) & ~V) != 0) {
            in = false;
            break;
          }
          if (Z == 0) break;
        }
        if (closed && in != ((f.image(x, U) & ~V) == 0))
          throw ContractError("cm fast path disagrees with general form");
        if (in) val |= Elem{1} << x;
      }
      table.push_back(val);
    }
  }
  return CondAlg(B, std::move(table));
}

Verdict check_conditional_space(const TFrame& f) {
  for (const Triple& t : f.triples())
    for (PointSet U = 0; U <= f.full(); ++U)
      if ((t.mid & U) == t.mid && !f.has(t.x, U, t.y))
        return Verdict::fail({{"x", static_cast<std::uint64_t>(t.x)},
                              {"Z", t.mid},
                              {"y", static_cast<std::uint64_t>(t.y)},
                              {"U", U}},
                             "middle coordinate not upward closed");
  return Verdict::ok("conditional space");
}

Verdict frame_representation_check(const TFrame& f) {
  const int m = f.points();
  const CondAlg A = cm(f);
  const TFrame bar = upward_closure(f);

  // T'(x, Z, y) over the powerset algebra, via the principal-ultrafilter
  // embedding e: every U containing Z lies in the intersection of e[Z].
  std::vector<Triple> tprime;
  for (int x = 0; x < m; ++x) {
    for (PointSet Z = 0; Z <= f.full(); ++Z) {
      for (int y = 0; y < m; ++y) {
        bool rel = true;
        for (PointSet U = 0; U <= f.full() && rel; ++U) {
          if ((Z & U) != Z) continue;
          for (PointSet V = 0; V <= f.full(); ++V) {
            if ((A.cond(U, V) >> x & 1) && !(V >> y & 1)) {
              rel = false;
              break;
            }
          }
        }
        if (rel) tprime.push_back(Triple{x, Z, y});
      }
    }
  }
  const TFrame tprime_bar =
      upward_closure(TFrame(m, std::move(tprime)));

  if (!(tprime_bar == bar))
    return Verdict::fail({}, "closure of T' differs from closure of T");
  for (const Triple& t : f.triples())
    if (!tprime_bar.has(t.x, t.mid, t.y))
      return Verdict::fail({{"x", static_cast<std::uint64_t>(t.x)},
                            {"Z", t.mid},
                            {"y", static_cast<std::uint64_t>(t.y)}},
                           "triple not preserved by the embedding");
  if (!(cm(f) == cm(bar)))
    return Verdict::fail({}, "complex algebra changed under upward closure");
  return Verdict::ok("frame representation");
}

}  // namespace condalg

#include "mctx/word.hpp"

#include <limits>

namespace mctx {

HoleLayer HoleLayer::single(ObjectList left, Hole hole, ObjectList right) {
  return HoleLayer{{std::move(left), std::move(right)}, {std::move(hole)}};
}

HoleLayer HoleLayer::pair(ObjectList p0, Hole h1, ObjectList p1, Hole h2, ObjectList p2) {
  return HoleLayer{{std::move(p0), std::move(p1), std::move(p2)}, {std::move(h1), std::move(h2)}};
}

ObjectList HoleLayer::inputs() const {
  std::vector<ObjectList> parts{residuals[0]};
  for (std::size_t i = 0; i < holes.size(); ++i) {
    parts.push_back(holes[i].x);
    parts.push_back(residuals[i + 1]);
  }
  return tensor_all(parts);
}

ObjectList HoleLayer::outputs() const {
  std::vector<ObjectList> parts{residuals[0]};
  for (std::size_t i = 0; i < holes.size(); ++i) {
    parts.push_back(holes[i].y);
    parts.push_back(residuals[i + 1]);
  }
  return tensor_all(parts);
}

std::vector<Hole> Word::holes() const {
  std::vector<Hole> out;
  for (const auto& l : layers) out.insert(out.end(), l.holes.begin(), l.holes.end());
  return out;
}

void Word::check() const {
  if (pieces.size() != layers.size() + 1) throw TypeError("word needs one more piece than layers");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& l = layers[i];
    if (l.residuals.size() != l.holes.size() + 1) throw TypeError("layer residual count mismatch");
    if (pieces[i].cod() != l.inputs())
      throw TypeError("layer " + std::to_string(i) + ": piece produces " + pieces[i].cod().str() +
                      ", layer expects " + l.inputs().str());
    if (pieces[i + 1].dom() != l.outputs())
      throw TypeError("layer " + std::to_string(i) + ": layer yields " + l.outputs().str() + ", next piece takes " +
                      pieces[i + 1].dom().str());
  }
}

Morphism fill(const Theory& t, const Word& w, const std::vector<Morphism>& fillers) {
  auto hs = w.holes();
  if (fillers.size() != hs.size())
    throw TypeError("fill: " + std::to_string(hs.size()) + " holes, " + std::to_string(fillers.size()) + " fillers");
  Morphism acc = w.pieces[0];
  std::size_t k = 0;
  for (std::size_t i = 0; i < w.layers.size(); ++i) {
    const auto& l = w.layers[i];
    std::vector<Morphism> parts{t.identity(l.residuals[0])};
    for (std::size_t j = 0; j < l.holes.size(); ++j, ++k) {
      const Morphism& h = fillers[k];
      if (h.dom() != l.holes[j].x || h.cod() != l.holes[j].y)
        throw TypeError("filler " + std::to_string(k) + " has type " + h.dom().str() + " -> " + h.cod().str() +
                        ", hole is " + l.holes[j].str());
      parts.push_back(t.adopt(h));
      parts.push_back(t.identity(l.residuals[j + 1]));
    }
    acc = t.seq(acc, t.par_all(parts), w.pieces[i + 1]);
  }
  return acc;
}

Morphism transcript(const Theory& t, const Word& w) {
  auto hs = w.holes();
  std::vector<ObjectList> ys;
  for (const auto& h : hs) ys.push_back(h.y);
  Morphism acc = t.tensor(w.pieces[0], t.identity(tensor_all(ys)));
  ObjectList collected;
  std::size_t next = 0;  // first pending input
  for (std::size_t i = 0; i < w.layers.size(); ++i) {
    const auto& l = w.layers[i];
    std::size_t k = l.holes.size();
    // blocks: P0 X1 P1 ... Xk Pk | Y_next .. Y_next+k-1 | Y_rest | collected
    std::vector<ObjectList> blocks;
    for (std::size_t j = 0; j < k; ++j) {
      blocks.push_back(l.residuals[j]);
      blocks.push_back(l.holes[j].x);
    }
    blocks.push_back(l.residuals[k]);
    std::size_t ybase = blocks.size();
    for (std::size_t j = 0; j < k; ++j) blocks.push_back(ys[next + j]);
    std::vector<ObjectList> rest(ys.begin() + static_cast<std::ptrdiff_t>(next + k), ys.end());
    ObjectList y_rest = tensor_all(rest);
    blocks.push_back(y_rest);
    blocks.push_back(collected);
    std::size_t rest_idx = blocks.size() - 2, coll_idx = blocks.size() - 1;

    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < k; ++j) {
      order.push_back(2 * j);
      order.push_back(ybase + j);
    }
    order.push_back(2 * k);
    order.push_back(rest_idx);
    order.push_back(coll_idx);
    for (std::size_t j = 0; j < k; ++j) {
      order.push_back(2 * j + 1);
      collected = tensor(collected, l.holes[j].x);
    }
    acc = t.compose(acc, t.permute(blocks, order));
    acc = t.compose(acc, t.tensor(w.pieces[i + 1], t.identity(tensor(y_rest, collected))));
    next += k;
  }
  return acc;
}

std::vector<std::vector<Morphism>> filler_assignments(const Theory& t, const std::vector<Hole>& holes,
                                                      std::size_t budget, std::size_t samples,
                                                      std::uint64_t seed) {
  std::size_t total = 1;
  bool over = false;
  for (const auto& h : holes) {
    std::size_t n = t.hom_size(h.x, h.y);
    if (t.kind() == TheoryKind::FinStoch && n < std::numeric_limits<std::size_t>::max() / 8) n = 4 * n + 1;
    if (n > budget || total > budget / n) {
      over = true;
      break;
    }
    total *= n;
  }
  std::vector<std::vector<Morphism>> out;
  if (!over) {
    std::vector<std::vector<Morphism>> fam;
    for (const auto& h : holes) fam.push_back(t.probing_family(h.x, h.y));
    std::vector<std::size_t> idx(holes.size(), 0);
    while (true) {
      std::vector<Morphism> pick;
      for (std::size_t i = 0; i < holes.size(); ++i) pick.push_back(fam[i][idx[i]]);
      out.push_back(std::move(pick));
      std::size_t k = holes.size();
      while (k > 0) {
        --k;
        if (++idx[k] < fam[k].size()) break;
        idx[k] = 0;
        if (k == 0) return out;
      }
      if (holes.empty()) return out;
    }
  }
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Morphism> pick;
    for (const auto& h : holes) pick.push_back(t.random(rng, h.x, h.y));
    out.push_back(std::move(pick));
  }
  return out;
}

namespace {

std::string describe_fillers(const std::vector<Morphism>& fs) {
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? " | " : "") + fs[i].str();
  return s.empty() ? "(no holes)" : s;
}

}  // namespace

FillVerdict fill_equal(const Theory& t, const Word& a, const Word& b, const FillOptions& opt) {
  a.check();
  b.check();
  if (!(a.outer() == b.outer())) throw TypeError("fill_equal: outer types " + a.outer().str() + " vs " + b.outer().str());
  if (a.holes() != b.holes()) throw TypeError("fill_equal: hole types differ");
  if (!t.finite()) throw TheoryError("fill_equal needs a finite theory");
  for (const auto& fs : filler_assignments(t, a.holes(), opt.max_assignments, opt.samples)) {
    if (!t.equal(fill(t, a, fs), fill(t, b, fs))) return {false, "fillers " + describe_fillers(fs)};
  }
  if (opt.use_transcript && t.symmetric()) {
    Morphism ta = transcript(t, a), tb = transcript(t, b);
    if (!t.equal(ta, tb)) {
      std::size_t row = 0;
      if (t.kind() == TheoryKind::FinFn) {
        while (ta.table()[row] == tb.table()[row]) ++row;
      } else {
        const auto& ma = ta.matrix();
        const auto& mb = tb.matrix();
        for (row = 0; row < ma.rows; ++row) {
          bool same = true;
          for (std::size_t c = 0; c < ma.cols; ++c) same = same && ma.at(row, c) == mb.at(row, c);
          if (!same) break;
        }
      }
      return {false, "generic probe differs on input " + t.signature().label(ta.dom(), row)};
    }
  }
  return {};
}

}  // namespace mctx

#include "mctx/theory.hpp"

#include <algorithm>
#include <limits>

namespace mctx {

std::size_t uniform_index(Rng& rng, std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index over empty range");
  return static_cast<std::size_t>(rng() % n);
}

void Signature::declare(const std::string& atom, std::size_t size, std::vector<std::string> labels) {
  if (size == 0) throw TypeError("atom '" + atom + "' needs a positive carrier size");
  if (!labels.empty() && labels.size() != size)
    throw TypeError("atom '" + atom + "' has " + std::to_string(labels.size()) + " labels for carrier " +
                    std::to_string(size));
  atoms_[atom] = AtomInfo{size, std::move(labels)};
}

const AtomInfo& Signature::info(const std::string& atom) const {
  auto it = atoms_.find(atom);
  if (it == atoms_.end()) throw TypeError("undeclared atom '" + atom + "'");
  return it->second;
}

std::size_t Signature::carrier(const ObjectList& obj) const {
  std::size_t c = 1;
  for (const auto& a : obj.atoms()) c *= info(a).size;
  return c;
}

std::vector<std::size_t> Signature::radices(const ObjectList& obj) const {
  std::vector<std::size_t> r;
  for (const auto& a : obj.atoms()) r.push_back(info(a).size);
  return r;
}

std::vector<std::size_t> Signature::decode(const ObjectList& obj, std::size_t index) const {
  auto r = radices(obj);
  std::vector<std::size_t> digits(r.size());
  for (std::size_t k = r.size(); k-- > 0;) {
    digits[k] = index % r[k];
    index /= r[k];
  }
  return digits;
}

std::size_t Signature::encode(const ObjectList& obj, const std::vector<std::size_t>& digits) const {
  auto r = radices(obj);
  std::size_t index = 0;
  for (std::size_t k = 0; k < r.size(); ++k) index = index * r[k] + digits[k];
  return index;
}

std::string Signature::label(const ObjectList& obj, std::size_t index) const {
  auto digits = decode(obj, index);
  std::string out;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    const auto& inf = info(obj[k]);
    if (k) out += " ";
    out += obj[k] + "=" + (inf.labels.empty() ? std::to_string(digits[k]) : inf.labels[digits[k]]);
  }
  return out.empty() ? "*" : out;
}

Theory::Theory(TheoryKind kind, bool symmetric, std::shared_ptr<const Signature> sig)
    : kind_(kind), symmetric_(symmetric), sig_(std::move(sig)) {}

Theory Theory::fin_fn(Signature sig) {
  return Theory(TheoryKind::FinFn, true, std::make_shared<const Signature>(std::move(sig)));
}
Theory Theory::fin_stoch(Signature sig) {
  return Theory(TheoryKind::FinStoch, true, std::make_shared<const Signature>(std::move(sig)));
}
Theory Theory::free(bool symmetric) {
  return Theory(TheoryKind::Free, symmetric, std::make_shared<const Signature>());
}

Backend Theory::backend() const {
  switch (kind_) {
    case TheoryKind::FinFn: return Backend::FinFn;
    case TheoryKind::FinStoch: return Backend::FinStoch;
    case TheoryKind::Free: return Backend::Free;
  }
  return Backend::Free;
}

void Theory::check_backend(const Morphism& m) const {
  if (m.backend() != backend())
    throw TheoryError("theory mismatch: " + backend_name(m.backend()) + " morphism in a " +
                      backend_name(backend()) + " theory");
}

namespace {

StochMatrix point_matrix(std::size_t rows, std::size_t cols, const std::vector<std::uint32_t>& t) {
  StochMatrix m{rows, cols, std::vector<Rational>(rows * cols)};
  for (std::size_t r = 0; r < rows; ++r) m.at(r, t[r]) = 1;
  return m;
}

}  // namespace

Morphism Theory::identity(const ObjectList& obj) const {
  if (kind_ == TheoryKind::Free) return Morphism(FreeTerm::identity(obj));
  std::size_t c = carrier(obj);
  std::vector<std::uint32_t> t(c);
  for (std::size_t i = 0; i < c; ++i) t[i] = static_cast<std::uint32_t>(i);
  if (kind_ == TheoryKind::FinFn) return Morphism(obj, obj, std::move(t));
  return Morphism(obj, obj, point_matrix(c, c, t));
}

Morphism Theory::compose(const Morphism& f, const Morphism& g) const {
  check_backend(f);
  check_backend(g);
  if (f.cod() != g.dom()) throw TypeError("compose: codomain " + f.cod().str() + " vs domain " + g.dom().str());
  switch (kind_) {
    case TheoryKind::FinFn: {
      const auto& a = f.table();
      const auto& b = g.table();
      std::vector<std::uint32_t> t(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) t[i] = b[a[i]];
      return Morphism(f.dom(), g.cod(), std::move(t));
    }
    case TheoryKind::FinStoch: {
      const auto& a = f.matrix();
      const auto& b = g.matrix();
      StochMatrix m{a.rows, b.cols, std::vector<Rational>(a.rows * b.cols)};
      for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t k = 0; k < a.cols; ++k) {
          const Rational& w = a.at(r, k);
          if (w == 0) continue;
          for (std::size_t c = 0; c < b.cols; ++c)
            if (b.at(k, c) != 0) m.at(r, c) += w * b.at(k, c);
        }
      return Morphism(f.dom(), g.cod(), std::move(m));
    }
    case TheoryKind::Free: return Morphism(FreeTerm::compose(f.term(), g.term()));
  }
  throw TheoryError("unreachable");
}

Morphism Theory::tensor(const Morphism& f, const Morphism& g) const {
  check_backend(f);
  check_backend(g);
  ObjectList dom = mctx::tensor(f.dom(), g.dom());
  ObjectList cod = mctx::tensor(f.cod(), g.cod());
  switch (kind_) {
    case TheoryKind::FinFn: {
      const auto& a = f.table();
      const auto& b = g.table();
      std::size_t n2 = carrier(g.cod());
      std::vector<std::uint32_t> t(a.size() * b.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
          t[i * b.size() + j] = static_cast<std::uint32_t>(a[i] * n2 + b[j]);
      return Morphism(dom, cod, std::move(t));
    }
    case TheoryKind::FinStoch: {
      const auto& a = f.matrix();
      const auto& b = g.matrix();
      StochMatrix m{a.rows * b.rows, a.cols * b.cols, std::vector<Rational>(a.rows * b.rows * a.cols * b.cols)};
      for (std::size_t r1 = 0; r1 < a.rows; ++r1)
        for (std::size_t c1 = 0; c1 < a.cols; ++c1) {
          const Rational& w = a.at(r1, c1);
          if (w == 0) continue;
          for (std::size_t r2 = 0; r2 < b.rows; ++r2)
            for (std::size_t c2 = 0; c2 < b.cols; ++c2)
              if (b.at(r2, c2) != 0) m.at(r1 * b.rows + r2, c1 * b.cols + c2) = w * b.at(r2, c2);
        }
      return Morphism(dom, cod, std::move(m));
    }
    case TheoryKind::Free: return Morphism(FreeTerm::tensor(f.term(), g.term()));
  }
  throw TheoryError("unreachable");
}

Morphism Theory::symmetry(const ObjectList& a, const ObjectList& b) const {
  if (!symmetric_) throw TheoryError("symmetry requested in a non-symmetric theory");
  if (kind_ == TheoryKind::Free) return Morphism(FreeTerm::symmetry(a, b));
  return permute({a, b}, {1, 0});
}

Morphism Theory::seq_all(const std::vector<Morphism>& fs) const {
  if (fs.empty()) throw TypeError("empty composite");
  Morphism acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = compose(acc, fs[i]);
  return acc;
}

Morphism Theory::par_all(const std::vector<Morphism>& fs) const {
  if (fs.empty()) return identity({});
  Morphism acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = tensor(acc, fs[i]);
  return acc;
}

Morphism Theory::permute(const std::vector<ObjectList>& blocks, const std::vector<std::size_t>& order) const {
  if (order.size() != blocks.size()) throw TypeError("permute: order/blocks size mismatch");
  {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw TypeError("permute: order is not a permutation");
  }
  ObjectList dom = tensor_all(blocks);
  std::vector<ObjectList> target;
  for (auto k : order) target.push_back(blocks[k]);
  ObjectList cod = tensor_all(target);
  // Identity on wires when the non-empty blocks keep their relative order.
  bool trivial = true;
  std::size_t last = 0;
  bool seen = false;
  for (auto k : order) {
    if (blocks[k].empty()) continue;
    if (seen && k < last) trivial = false;
    last = k;
    seen = true;
  }
  if (trivial) return identity(dom);
  if (!symmetric_ && !trivial) throw TheoryError("wire permutation in a non-symmetric theory");

  if (kind_ == TheoryKind::Free) {
    std::vector<std::size_t> cur(blocks.size());
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = i;
    std::vector<std::size_t> rank(blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    Morphism acc = identity(dom);
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (rank[cur[i]] > rank[cur[i + 1]]) {
          std::vector<ObjectList> pre, post;
          for (std::size_t k = 0; k < i; ++k) pre.push_back(blocks[cur[k]]);
          for (std::size_t k = i + 2; k < cur.size(); ++k) post.push_back(blocks[cur[k]]);
          Morphism step = par(identity(tensor_all(pre)), symmetry(blocks[cur[i]], blocks[cur[i + 1]]),
                              identity(tensor_all(post)));
          acc = compose(acc, step);
          std::swap(cur[i], cur[i + 1]);
          swapped = true;
        }
      }
    }
    return acc;
  }

  std::vector<std::size_t> sizes;
  for (const auto& b : blocks) sizes.push_back(carrier(b));
  std::size_t total = carrier(dom);
  std::vector<std::uint32_t> t(total);
  std::vector<std::size_t> digit(blocks.size());
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = blocks.size(); k-- > 0;) {
      digit[k] = rest % sizes[k];
      rest /= sizes[k];
    }
    std::size_t out = 0;
    for (auto k : order) out = out * sizes[k] + digit[k];
    t[idx] = static_cast<std::uint32_t>(out);
  }
  if (kind_ == TheoryKind::FinFn) return Morphism(dom, cod, std::move(t));
  return Morphism(dom, cod, point_matrix(total, total, t));
}

bool Theory::equal(const Morphism& f, const Morphism& g) const {
  check_backend(f);
  check_backend(g);
  if (f.dom() != g.dom() || f.cod() != g.cod()) return false;
  switch (kind_) {
    case TheoryKind::FinFn: return f.table() == g.table();
    case TheoryKind::FinStoch: return f.matrix() == g.matrix();
    case TheoryKind::Free:
      throw TheoryError("equality of free terms is undecided; interpret them into a finite theory first");
  }
  return false;
}

Morphism Theory::table(const ObjectList& dom, const ObjectList& cod, std::vector<std::uint32_t> t) const {
  Morphism m(dom, cod, std::move(t));
  if (kind_ == TheoryKind::FinStoch) {
    validate(m);
    return adopt(m);
  }
  validate(m);
  return m;
}

Morphism Theory::matrix(const ObjectList& dom, const ObjectList& cod, StochMatrix mat) const {
  Morphism m(dom, cod, std::move(mat));
  validate(m);
  return m;
}

Morphism Theory::function(const ObjectList& dom, const ObjectList& cod,
                          const std::function<std::size_t(std::size_t)>& fn) const {
  std::size_t n = carrier(dom);
  std::vector<std::uint32_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<std::uint32_t>(fn(i));
  return table(dom, cod, std::move(t));
}

Morphism Theory::generator(const std::string& name, const ObjectList& dom, const ObjectList& cod) const {
  if (kind_ != TheoryKind::Free) throw TheoryError("generators live in free theories");
  return Morphism(FreeTerm::generator(name, dom, cod));
}

void Theory::validate(const Morphism& m) const {
  switch (m.backend()) {
    case Backend::FinFn: {
      if (kind_ == TheoryKind::Free) throw TheoryError("finite table in a free theory");
      std::size_t n = carrier(m.dom());
      std::size_t c = carrier(m.cod());
      if (m.table().size() != n)
        throw TypeError("table has " + std::to_string(m.table().size()) + " entries, domain " + m.dom().str() +
                        " has carrier " + std::to_string(n));
      for (auto v : m.table())
        if (v >= c) throw TypeError("table entry " + std::to_string(v) + " outside codomain " + m.cod().str());
      return;
    }
    case Backend::FinStoch: {
      if (kind_ != TheoryKind::FinStoch) throw TheoryError("stochastic matrix outside a finstoch theory");
      const auto& mat = m.matrix();
      if (mat.rows != carrier(m.dom()) || mat.cols != carrier(m.cod()) || mat.data.size() != mat.rows * mat.cols)
        throw TypeError("matrix shape does not match " + m.dom().str() + " -> " + m.cod().str());
      for (std::size_t r = 0; r < mat.rows; ++r) {
        Rational sum = 0;
        for (std::size_t c = 0; c < mat.cols; ++c) {
          if (mat.at(r, c) < 0) throw TypeError("negative matrix entry in row " + std::to_string(r));
          sum += mat.at(r, c);
        }
        if (sum != 1) throw TypeError("matrix row " + std::to_string(r) + " sums to " + to_string(sum));
      }
      return;
    }
    case Backend::Free:
      if (kind_ != TheoryKind::Free) throw TheoryError("free term in a finite theory; use eval_term");
      return;
  }
}

Morphism Theory::adopt(const Morphism& m) const {
  if (m.backend() == backend()) return m;
  if (m.backend() == Backend::FinFn && kind_ == TheoryKind::FinStoch)
    return Morphism(m.dom(), m.cod(), point_matrix(m.table().size(), carrier(m.cod()), m.table()));
  throw TheoryError("cannot bring a " + backend_name(m.backend()) + " morphism into a " + backend_name(backend()) +
                    " theory");
}

Morphism Theory::copy(const ObjectList& a) const {
  if (!finite()) throw TheoryError("copy needs a finite theory");
  std::size_t c = carrier(a);
  return function(a, mctx::tensor(a, a), [c](std::size_t i) { return i * c + i; });
}

Morphism Theory::discard(const ObjectList& a) const {
  if (!finite()) throw TheoryError("discard needs a finite theory");
  return function(a, {}, [](std::size_t) { return 0; });
}

std::size_t Theory::hom_size(const ObjectList& a, const ObjectList& b) const {
  std::size_t n = carrier(a), c = carrier(b), out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / c) return std::numeric_limits<std::size_t>::max();
    out *= c;
  }
  return out;
}

namespace {

std::vector<std::vector<std::uint32_t>> all_tables(std::size_t n, std::size_t c) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> t(n, 0);
  while (true) {
    out.push_back(t);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++t[k] < c) break;
      t[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace

std::vector<Morphism> Theory::enumerate_hom(const ObjectList& a, const ObjectList& b) const {
  if (kind_ != TheoryKind::FinFn)
    throw TheoryError("enumerate_hom needs a finfn theory; use probing_family for finstoch");
  if (hom_size(a, b) > 1u << 22) throw TheoryError("hom set " + a.str() + " -> " + b.str() + " too large");
  std::vector<Morphism> out;
  for (auto& t : all_tables(carrier(a), carrier(b))) out.emplace_back(a, b, std::move(t));
  return out;
}

std::vector<Morphism> Theory::probing_family(const ObjectList& a, const ObjectList& b) const {
  if (kind_ == TheoryKind::FinFn) return enumerate_hom(a, b);
  if (kind_ != TheoryKind::FinStoch) throw TheoryError("free theories have no probing family");
  if (hom_size(a, b) > 1u << 16) throw TheoryError("probing family " + a.str() + " -> " + b.str() + " too large");
  std::size_t n = carrier(a), c = carrier(b);
  std::vector<Morphism> out;
  auto tables = all_tables(n, c);
  for (const auto& t : tables) out.emplace_back(a, b, point_matrix(n, c, t));
  if (c > 1) {
    StochMatrix uni{n, c, std::vector<Rational>(n * c, Rational(1, static_cast<long>(c)))};
    out.emplace_back(a, b, uni);
    for (const Rational& lam : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
      for (const auto& t : tables) {
        StochMatrix m{n, c, std::vector<Rational>(n * c)};
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t k = 0; k < c; ++k) m.at(r, k) = (1 - lam) * uni.at(r, k) + (k == t[r] ? lam : Rational(0));
        out.emplace_back(a, b, std::move(m));
      }
  }
  return out;
}

Morphism Theory::random(Rng& rng, const ObjectList& a, const ObjectList& b) const {
  std::size_t n = carrier(a), c = carrier(b);
  if (kind_ == TheoryKind::FinFn) {
    std::vector<std::uint32_t> t(n);
    for (auto& v : t) v = static_cast<std::uint32_t>(uniform_index(rng, c));
    return Morphism(a, b, std::move(t));
  }
  if (kind_ != TheoryKind::FinStoch) throw TheoryError("random morphisms need a finite theory");
  StochMatrix m{n, c, std::vector<Rational>(n * c)};
  for (std::size_t r = 0; r < n; ++r) {
    if (uniform_index(rng, 2) == 0) {
      m.at(r, uniform_index(rng, c)) = 1;
      continue;
    }
    std::vector<long> w(c);
    long total = 0;
    for (auto& x : w) total += (x = static_cast<long>(uniform_index(rng, 5)));
    if (total == 0) {
      w[uniform_index(rng, c)] = 1;
      total = 1;
    }
    for (std::size_t k = 0; k < c; ++k) m.at(r, k) = Rational(w[k], total);
  }
  return Morphism(a, b, std::move(m));
}

Morphism eval_term(const TermPtr& t, const std::map<std::string, Morphism>& interp, const Theory& target) {
  switch (t->kind()) {
    case FreeTerm::Kind::Generator: {
      auto it = interp.find(t->name());
      if (it == interp.end()) throw TypeError("no interpretation for generator '" + t->name() + "'");
      Morphism m = target.adopt(it->second);
      if (m.dom() != t->dom() || m.cod() != t->cod())
        throw TypeError("generator '" + t->name() + "' has type " + t->dom().str() + " -> " + t->cod().str() +
                        " but is interpreted at " + m.dom().str() + " -> " + m.cod().str());
      return m;
    }
    case FreeTerm::Kind::Identity: return target.identity(t->dom());
    case FreeTerm::Kind::Compose:
      return target.compose(eval_term(t->lhs(), interp, target), eval_term(t->rhs(), interp, target));
    case FreeTerm::Kind::Tensor:
      return target.tensor(eval_term(t->lhs(), interp, target), eval_term(t->rhs(), interp, target));
    case FreeTerm::Kind::Symmetry: return target.symmetry(t->sym_a(), t->sym_b());
  }
  throw TheoryError("unreachable");
}

}  // namespace mctx

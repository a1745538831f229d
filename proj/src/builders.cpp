#include "hodge/builders.hpp"

#include <algorithm>

namespace hodge {

namespace {

int sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

DecreasingFiltration filtration_from_types(const Mat& frame, const std::vector<BiDegree>& types) {
  if (frame.cols() != types.size()) throw Error("frame/type count mismatch");
  const std::size_t dim = frame.rows();
  if (types.empty()) return {dim, 0, {Subspace::full(dim)}};
  int lo = types.front().p;
  int hi = lo;
  for (const auto& t : types) {
    lo = std::min(lo, t.p);
    hi = std::max(hi, t.p);
  }
  std::vector<Subspace> steps;
  for (int k = lo; k <= hi; ++k) {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < types.size(); ++c) {
      if (types[c].p >= k) cols.push_back(frame.col(c));
    }
    steps.push_back(Subspace::span(cols, dim));
  }
  return {dim, lo, std::move(steps)};
}

SplitLmhs build_split_lmhs(int weight, const std::vector<StringSpec>& input) {
  struct Layout {
    StringSpec s;
    int l;
    std::size_t offset;
  };
  std::vector<Layout> layout;
  std::size_t dim = 0;
  std::size_t generators = 0;
  for (auto s : input) {
    if (s.p < s.q) std::swap(s.p, s.q);
    const int l = s.p + s.q - weight;
    if (l < 0) throw Error("string type " + to_string(BiDegree{s.p, s.q}) + " lies below weight " +
                           std::to_string(weight));
    layout.push_back({s, l, dim});
    dim += static_cast<std::size_t>((s.p == s.q ? 1 : 2) * (l + 1));
    if (l > 0) generators = std::max(generators, s.generator + 1);
  }
  SplitLmhs out;
  out.mhs.weight = weight;
  out.mhs.q = Mat(dim, dim);
  std::vector<Mat> ns(generators, Mat(dim, dim));
  std::vector<Vec> frame;
  const GaussScalar i = GaussScalar::i();
  for (const auto& [s, l, off] : layout) {
    const bool pair = s.p != s.q;
    const std::size_t width = pair ? 2 : 1;
    auto x = [&](int a) { return off + width * static_cast<std::size_t>(a); };
    auto y = [&](int a) { return off + width * static_cast<std::size_t>(a) + 1; };
    for (int a = 0; a < l; ++a) {
      ns[s.generator](x(a + 1), x(a)) = 1;
      if (pair) ns[s.generator](y(a + 1), y(a)) = 1;
    }
    // Q(u_a, v_b) = (-1)^a S(u, v) for a + b = l.
    for (int a = 0; a <= l; ++a) {
      const int b = l - a;
      const int sa = sign(a);
      if (!pair) {
        out.mhs.q(x(a), x(b)) = sa;
      } else if ((s.p + s.q) % 2 != 0) {
        const int sv = sign((s.p - s.q - 1) / 2);
        out.mhs.q(x(a), y(b)) = sa * sv;
        out.mhs.q(y(a), x(b)) = -sa * sv;
      } else {
        const int sv = sign((s.p - s.q) / 2);
        out.mhs.q(x(a), x(b)) = sa * sv;
        out.mhs.q(y(a), y(b)) = sa * sv;
      }
    }
    for (int a = 0; a <= l; ++a) {
      if (!pair) {
        frame.push_back(unit_vector(dim, x(a)));
        out.types.push_back({s.p - a, s.q - a});
        continue;
      }
      Vec w = unit_vector(dim, x(a));
      Vec wbar = w;
      w[y(a)] = i;
      wbar[y(a)] = -i;
      frame.push_back(std::move(w));
      out.types.push_back({s.p - a, s.q - a});
      frame.push_back(std::move(wbar));
      out.types.push_back({s.q - a, s.p - a});
    }
  }
  for (std::size_t j = 0; j < ns.size(); ++j) {
    if (ns[j].is_zero()) throw Error("cone generator " + std::to_string(j) + " acts on no string");
  }
  out.cone.generators = std::move(ns);
  out.frame = Mat::from_columns(frame, dim);
  out.mhs.f = filtration_from_types(out.frame, out.types);
  out.mhs.w = out.cone.empty() ? IncreasingFiltration::pure(dim, weight)
                               : weight_filtration(out.cone.interior(), weight);
  return out;
}

SplitLmhs change_basis(const SplitLmhs& s, const Mat& g) {
  const Mat gi = inverse(g);
  SplitLmhs out;
  out.mhs.weight = s.mhs.weight;
  out.mhs.q = gi.transpose() * s.mhs.q * gi;
  for (const auto& n : s.cone.generators) out.cone.generators.push_back(g * n * gi);
  out.frame = g * s.frame;
  out.types = s.types;
  out.mhs.f = filtration_from_types(out.frame, out.types);
  std::vector<Subspace> steps;
  for (const auto& st : s.mhs.w.steps()) steps.push_back(apply(g, st));
  out.mhs.w = IncreasingFiltration(s.dim(), s.mhs.w.lowest(), std::move(steps));
  return out;
}

SplitLmhs twist(const SplitLmhs& s, const Mat& delta) {
  SplitLmhs out = s;
  const Mat e = exp_nilpotent(GaussScalar::i() * delta);
  out.frame = e * s.frame;
  out.mhs.f = filtration_from_types(out.frame, out.types);
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

SplitLmhs tensor(const SplitLmhs& a, const SplitLmhs& b) {
  SplitLmhs out;
  out.mhs.weight = a.mhs.weight + b.mhs.weight;
  out.mhs.q = kron(a.mhs.q, b.mhs.q);
  const Mat ia = Mat::identity(a.dim());
  const Mat ib = Mat::identity(b.dim());
  for (const auto& n : a.cone.generators) out.cone.generators.push_back(kron(n, ib));
  for (const auto& n : b.cone.generators) out.cone.generators.push_back(kron(ia, n));
  out.frame = kron(a.frame, b.frame);
  for (const auto& ta : a.types) {
    for (const auto& tb : b.types) out.types.push_back({ta.p + tb.p, ta.q + tb.q});
  }
  const std::size_t dim = a.dim() * b.dim();
  out.mhs.f = filtration_from_types(out.frame, out.types);
  out.mhs.w = out.cone.empty() ? IncreasingFiltration::pure(dim, out.mhs.weight)
                               : weight_filtration(out.cone.interior(), out.mhs.weight);
  return out;
}

SplitLmhs weight_one_fixture(int genus, int a, bool separate_generators) {
  if (a < 0 || a > genus) throw Error("weight_one_fixture: need 0 <= a <= g");
  std::vector<StringSpec> strings;
  for (int j = 0; j < a; ++j) {
    strings.push_back({1, 1, separate_generators ? static_cast<std::size_t>(j) : 0});
  }
  for (int j = a; j < genus; ++j) strings.push_back({1, 0, 0});
  return build_split_lmhs(1, strings);
}

SplitLmhs elliptic_fixture() { return build_split_lmhs(1, {{1, 1, 0}}); }

SplitLmhs weight_two_fixture(int h, int kind) {
  struct Kind {
    std::vector<StringSpec> strings;
    int surplus;  // copies of (1,1) beyond h
  };
  static const std::vector<Kind> kinds = {
      {{{2, 0, 0}, {2, 0, 0}}, 0},  {{{2, 1, 0}, {2, 0, 0}}, -2}, {{{2, 2, 0}, {2, 0, 0}}, -1},
      {{{2, 1, 0}, {2, 1, 0}}, -4}, {{{2, 2, 0}, {2, 1, 0}}, -3}, {{{2, 2, 0}, {2, 2, 0}}, -2}};
  if (kind < 0 || kind >= static_cast<int>(kinds.size())) throw Error("weight_two_fixture: kind must be 0..5");
  const Kind& k = kinds[static_cast<std::size_t>(kind)];
  if (h + k.surplus < 0) {
    throw Error("weight_two_fixture: kind " + std::to_string(kind) + " needs h >= " + std::to_string(-k.surplus));
  }
  std::vector<StringSpec> strings = k.strings;
  for (int j = 0; j < h + k.surplus; ++j) strings.push_back({1, 1, 0});
  return build_split_lmhs(2, strings);
}

}  // namespace hodge

#include "cech2/nerve.hpp"

#include <set>

#include "cech2/error.hpp"

namespace cech2 {

namespace {

std::string show(const std::vector<Elem>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Failure detail for a map that is not a homomorphism, or empty.
std::string hom_defect(const GroupHom& f) {
  const FiniteGroup& A = *f.dom();
  const FiniteGroup& B = *f.cod();
  for (Elem a = 0; a < A.order(); ++a)
    for (Elem b = 0; b < A.order(); ++b)
      if (f(A.mul(a, b)) != B.mul(f(a), f(b))) return "pair " + std::to_string(a) + "," + std::to_string(b);
  return {};
}

}  // namespace

Elem TruncatedSimplicialGroup::start(int p, Elem x) const { return static_cast<Elem>(x / ipow(kernel_order(), p)); }

std::vector<Elem> TruncatedSimplicialGroup::coordinates(int p, Elem x) const {
  std::vector<Elem> out(p + 1);
  const int m = kernel_order();
  for (int i = p; i >= 1; --i) {
    out[i] = x % m;
    x /= m;
  }
  out[0] = x;
  return out;
}

std::vector<Elem> TruncatedSimplicialGroup::arrows(int p, Elem x) const {
  const std::vector<Elem> c = coordinates(p, x);
  std::vector<Elem> out;
  Elem cur = c[0];
  for (int i = 1; i <= p; ++i) {
    const Elem a = tg_.mor()->mul(kernel_[c[i]], tg_.unit()(cur));
    out.push_back(a);
    cur = tg_.tgt()(a);
  }
  return out;
}

std::vector<Elem> TruncatedSimplicialGroup::objects(int p, Elem x) const {
  std::vector<Elem> out{start(p, x)};
  for (Elem a : arrows(p, x)) out.push_back(tg_.tgt()(a));
  return out;
}

Elem TruncatedSimplicialGroup::from_arrows(Elem start, const std::vector<Elem>& arrows) const {
  const FiniteGroup& mor = *tg_.mor();
  long long idx = start;
  Elem cur = start;
  for (Elem a : arrows) {
    if (tg_.src()(a) != cur)
      throw Error(ErrorCode::NotComposable, "arrow " + std::to_string(a) + " does not start at " + std::to_string(cur));
    idx = idx * kernel_order() + kernel_pos_[mor.mul(a, mor.inv(tg_.unit()(cur)))];
    cur = tg_.tgt()(a);
  }
  return static_cast<Elem>(idx);
}

TruncatedSimplicialGroup nerve_two_group(const TwoGroup& tg, const NerveOptions& options) {
  if (options.levels < 0) throw Error(ErrorCode::InvalidInput, "negative truncation level");
  TruncatedSimplicialGroup n(tg);
  const FiniteGroup& mor = *tg.mor();
  const FiniteGroup& ob = *tg.ob();
  n.kernel_pos_.assign(mor.order(), -1);
  for (Elem b = 0; b < mor.order(); ++b)
    if (tg.src()(b) == 0) {
      n.kernel_pos_[b] = static_cast<Elem>(n.kernel_.size());
      n.kernel_.push_back(b);
    }
  const int m = n.kernel_order();
  const std::string base = tg.source() ? tg.source()->name() : tg.mor()->name();

  std::vector<std::vector<std::vector<Elem>>> strings;  // per level, arrows of each element
  for (int p = 0; p <= options.levels; ++p) {
    const long long order = ob.order() * ipow(m, p);
    if (order > options.max_level_order)
      throw Error(ErrorCode::BudgetExceeded, "nerve level " + std::to_string(p) + " has " + std::to_string(order) +
                                                 " elements, cap " + std::to_string(options.max_level_order));
    const int size = static_cast<int>(order);
    std::vector<std::vector<Elem>> arr(size);
    for (Elem x = 0; x < size; ++x) arr[x] = n.arrows(p, x);
    std::vector<std::vector<Elem>> table(size, std::vector<Elem>(size));
    for (Elem a = 0; a < size; ++a)
      for (Elem b = 0; b < size; ++b) {
        const Elem s = ob.mul(n.start(p, a), n.start(p, b));
        std::vector<Elem> c(p);
        for (int i = 0; i < p; ++i) c[i] = mor.mul(arr[a][i], arr[b][i]);
        table[a][b] = n.from_arrows(s, c);
      }
    const std::string name = "N" + std::to_string(p) + "(" + base + ")";
    n.levels_.push_back(size <= options.full_validation_below ? FiniteGroup::validate(name, table)
                                                              : FiniteGroup::inherited(name, table));
    strings.push_back(std::move(arr));
  }

  n.faces_.resize(n.levels_.size());
  n.degeneracies_.resize(n.levels_.size());
  for (int p = 1; p <= options.levels; ++p) {
    const int size = n.levels_[p]->order();
    for (int i = 0; i <= p; ++i) {
      std::vector<Elem> map(size);
      for (Elem x = 0; x < size; ++x) {
        const std::vector<Elem>& a = strings[p][x];
        std::vector<Elem> out;
        Elem s = n.start(p, x);
        if (i == 0) {
          s = tg.tgt()(a[0]);
          out.assign(a.begin() + 1, a.end());
        } else if (i == p) {
          out.assign(a.begin(), a.end() - 1);
        } else {
          out.assign(a.begin(), a.begin() + (i - 1));
          out.push_back(tg.compose(a[i], a[i - 1]));
          out.insert(out.end(), a.begin() + i + 1, a.end());
        }
        map[x] = n.from_arrows(s, out);
      }
      n.faces_[p].push_back(GroupHom::validate(n.levels_[p], n.levels_[p - 1], std::move(map)));
    }
  }
  for (int p = 0; p < options.levels; ++p) {
    const int size = n.levels_[p]->order();
    for (int i = 0; i <= p; ++i) {
      std::vector<Elem> map(size);
      for (Elem x = 0; x < size; ++x) {
        std::vector<Elem> a = strings[p][x];
        const Elem xi = n.objects(p, x)[i];
        a.insert(a.begin() + i, tg.unit()(xi));
        map[x] = n.from_arrows(n.start(p, x), a);
      }
      n.degeneracies_[p].push_back(GroupHom::validate(n.levels_[p], n.levels_[p + 1], std::move(map)));
    }
  }
  return n;
}

TruncatedSimplicialGroup nerve_two_group(const CrossedModule& xm, const NerveOptions& options) {
  return nerve_two_group(two_group_from_crossed_module(xm), options);
}

Report check_simplicial_identities(const TruncatedSimplicialGroup& n) {
  Report report;
  report.suite = "simplicial";
  const int N = n.top();
  for (int p = 0; p <= N; ++p) report.figures["level_" + std::to_string(p)] = n.level(p)->order();

  auto sweep = [&](const std::string& name, int level, auto&& lhs, auto&& rhs) {
    for (Elem x = 0; x < n.level(level)->order(); ++x)
      if (lhs(x) != rhs(x)) {
        report.add(name, false, "level " + std::to_string(level) + ", element " + std::to_string(x));
        return;
      }
    report.add(name, true);
  };
  const auto d = [&](int p, int i) -> const GroupHom& { return n.face(p, i); };
  const auto s = [&](int p, int i) -> const GroupHom& { return n.degeneracy(p, i); };

  for (int p = 2; p <= N; ++p)
    for (int j = 1; j <= p; ++j)
      for (int i = 0; i < j; ++i)
        sweep("d" + std::to_string(i) + " d" + std::to_string(j) + " = d" + std::to_string(j - 1) + " d" +
                  std::to_string(i) + " on level " + std::to_string(p),
              p, [&](Elem x) { return d(p - 1, i)(d(p, j)(x)); }, [&](Elem x) { return d(p - 1, j - 1)(d(p, i)(x)); });

  for (int p = 0; p < N; ++p)
    for (int j = 0; j <= p; ++j)
      for (int i = 0; i <= p + 1; ++i) {
        const std::string name =
            "d" + std::to_string(i) + " s" + std::to_string(j) + " on level " + std::to_string(p);
        if (i < j) {
          sweep(name, p, [&](Elem x) { return d(p + 1, i)(s(p, j)(x)); },
                [&](Elem x) { return s(p - 1, j - 1)(d(p, i)(x)); });
        } else if (i == j || i == j + 1) {
          sweep(name, p, [&](Elem x) { return d(p + 1, i)(s(p, j)(x)); }, [&](Elem x) { return x; });
        } else {
          sweep(name, p, [&](Elem x) { return d(p + 1, i)(s(p, j)(x)); },
                [&](Elem x) { return s(p - 1, j)(d(p, i - 1)(x)); });
        }
      }

  for (int p = 0; p + 2 <= N; ++p)
    for (int j = 0; j <= p; ++j)
      for (int i = 0; i <= j; ++i)
        sweep("s" + std::to_string(i) + " s" + std::to_string(j) + " = s" + std::to_string(j + 1) + " s" +
                  std::to_string(i) + " on level " + std::to_string(p),
              p, [&](Elem x) { return s(p + 1, i)(s(p, j)(x)); }, [&](Elem x) { return s(p + 1, j + 1)(s(p, i)(x)); });

  for (int p = 1; p <= N; ++p)
    for (int i = 0; i <= p; ++i) {
      const std::string defect = hom_defect(d(p, i));
      report.add("d" + std::to_string(i) + " on level " + std::to_string(p) + " is a homomorphism", defect.empty(), defect);
    }
  for (int p = 0; p < N; ++p)
    for (int i = 0; i <= p; ++i) {
      const std::string defect = hom_defect(s(p, i));
      report.add("s" + std::to_string(i) + " on level " + std::to_string(p) + " is a homomorphism", defect.empty(), defect);
    }
  return report;
}

Report check_level_iso(const TruncatedSimplicialGroup& n, const CrossedModule& xm, std::uint64_t max_tuples) {
  Report report;
  report.suite = "level-iso";
  const TwoGroup tg = two_group_from_crossed_module(xm);
  const int ng = xm.G()->order(), nh = xm.H()->order(), nm = tg.mor()->order();
  if (n.two_group().mor()->order() != nm || n.two_group().ob()->order() != ng || n.kernel_order() != nh) {
    report.add("nerve built from these coefficients", false);
    return report;
  }
  for (int p = 0; p <= n.top(); ++p) {
    const std::string lv = "level " + std::to_string(p);
    const long long expected = ng * ipow(nh, p);
    if (static_cast<std::uint64_t>(ipow(nm, p)) > max_tuples)
      throw Error(ErrorCode::BudgetExceeded, lv + ": " + std::to_string(ipow(nm, p)) + " tuples");
    report.add(lv + " order is |G||H|^p", n.level(p)->order() == expected,
               std::to_string(n.level(p)->order()) + " vs " + std::to_string(expected));

    // Composable tuples straight from the morphism group.
    std::vector<std::vector<Elem>> tuples;
    std::vector<Elem> starts;
    if (p == 0) {
      for (Elem g = 0; g < ng; ++g) {
        tuples.push_back({});
        starts.push_back(g);
      }
    } else {
      std::vector<Elem> t(p, 0);
      while (true) {
        bool ok = true;
        for (int i = 0; i + 1 < p && ok; ++i) ok = tg.composable(t[i], t[i + 1]);
        if (ok) {
          tuples.push_back(t);
          starts.push_back(tg.src()(t[0]));
        }
        int i = p - 1;
        while (i >= 0 && ++t[i] == nm) t[i--] = 0;
        if (i < 0) break;
      }
    }
    report.add(lv + " composable tuple count", static_cast<long long>(tuples.size()) == expected,
               std::to_string(tuples.size()));

    std::set<std::vector<Elem>> coords;
    std::string mismatch;
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      std::vector<Elem> c{starts[k]};
      for (Elem a : tuples[k]) c.push_back(pair_first(a, ng));
      coords.insert(c);
      const Elem stored = n.from_arrows(starts[k], tuples[k]);
      if (mismatch.empty() && (n.coordinates(p, stored) != c || n.arrows(p, stored) != tuples[k]))
        mismatch = show(tuples[k]);
      if (!mismatch.empty() || p == 0) continue;
      // Faces and degeneracies against the string model.
      const std::vector<Elem>& a = tuples[k];
      for (int i = 0; i <= p && mismatch.empty(); ++i) {
        std::vector<Elem> out;
        Elem s = starts[k];
        if (i == 0) {
          s = tg.tgt()(a[0]);
          out.assign(a.begin() + 1, a.end());
        } else if (i == p) {
          out.assign(a.begin(), a.end() - 1);
        } else {
          out.assign(a.begin(), a.begin() + (i - 1));
          out.push_back(encode_pair(xm.H()->mul(pair_first(a[i], ng), pair_first(a[i - 1], ng)), pair_second(a[i - 1], ng), ng));
          out.insert(out.end(), a.begin() + i + 1, a.end());
        }
        if (n.face(p, i)(stored) != n.from_arrows(s, out)) mismatch = "d" + std::to_string(i) + " at " + show(a);
      }
    }
    report.add(lv + " (start, H-parts) is a bijection onto G x H^p",
               static_cast<long long>(coords.size()) == expected && coords.size() == tuples.size());
    report.add(lv + " agrees with the string model", mismatch.empty(), mismatch);
  }
  return report;
}

Report check_bar_multiplication(const GroupPtr& G, const GroupPtr& H, const GroupAction& alpha, int p,
                                std::uint64_t max_pairs) {
  Report report;
  report.suite = "bar-multiplication";
  const TwoGroup tg = semidirect_two_group(segal_bar_two_group(H), alpha);
  NerveOptions options;
  options.levels = p;
  const TruncatedSimplicialGroup n = nerve_two_group(tg, options);
  const int ng = G->order();
  std::uint64_t pairs = 0;
  for (int q = 0; q <= p; ++q) {
    const std::string lv = "level " + std::to_string(q);
    const int size = n.level(q)->order();
    pairs += static_cast<std::uint64_t>(size) * size;
    if (pairs > max_pairs) throw Error(ErrorCode::BudgetExceeded, lv + ": " + std::to_string(pairs) + " pairs");

    // (g, h_0, ..., h_q) read off the objects (g, h_i) of G ⋉ H.
    std::vector<std::vector<Elem>> coords(size);
    bool constant_g = true;
    for (Elem x = 0; x < size; ++x) {
      const std::vector<Elem> objs = n.objects(q, x);
      coords[x].push_back(pair_second(objs[0], ng));
      for (Elem o : objs) {
        constant_g = constant_g && pair_second(o, ng) == coords[x][0];
        coords[x].push_back(pair_first(o, ng));
      }
    }
    const std::set<std::vector<Elem>> distinct(coords.begin(), coords.end());
    report.add(lv + " objects along a string share g", constant_g);
    report.add(lv + " coordinates are a bijection onto G x H^(q+1)",
               static_cast<long long>(distinct.size()) == size && size == ng * ipow(H->order(), q + 1),
               std::to_string(size) + " elements");
    std::string mismatch;
    for (Elem a = 0; a < size && mismatch.empty(); ++a)
      for (Elem b = 0; b < size; ++b) {
        const std::vector<Elem>& x = coords[a];
        const std::vector<Elem>& y = coords[b];
        std::vector<Elem> want{G->mul(x[0], y[0])};
        for (int k = 1; k <= q + 1; ++k) want.push_back(H->mul(x[k], alpha(x[0], y[k])));
        if (coords[n.level(q)->mul(a, b)] != want) {
          mismatch = show(x) + " * " + show(y);
          break;
        }
      }
    report.add(lv + " product matches the closed form", mismatch.empty(), mismatch);
  }
  report.figures["pairs"] = static_cast<std::int64_t>(pairs);
  return report;
}

}  // namespace cech2

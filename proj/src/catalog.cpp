#include "wonderful/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "wonderful/error.hpp"
#include "wonderful/rank_one.hpp"

namespace wonderful {

namespace {

RootPattern single(int i, int coeff = 1, int comp = 0) { return {Term{comp, i, coeff}}; }

/// coeff·(α_from + … + α_to); empty when from > to.
RootPattern chain(int from, int to, int coeff = 1, int comp = 0) {
  RootPattern r;
  for (int i = from; i <= to; ++i) r.push_back({comp, i, coeff});
  return r;
}

RootPattern operator+(RootPattern a, const RootPattern& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// α_from + 2α_{from+1} + … + 2α_{n−1} + α_n, the c∗ root on a type C tail (from < n).
RootPattern c_tail(int from, int n, int comp = 0) {
  return single(from, 1, comp) + chain(from + 1, n - 1, 2, comp) + single(n, 1, comp);
}

/// 2α_from + … + 2α_{n−2} + α_{n−1} + α_n, the d root on a type D tail (from ≤ n−1).
RootPattern d_tail(int from, int n) { return chain(from, n - 2, 2) + single(n - 1) + single(n); }

/// α_i + α_{i+1} for from ≤ i < to.
std::vector<RootPattern> edges(int from, int to, int comp = 0) {
  std::vector<RootPattern> out;
  for (int i = from; i < to; ++i) out.push_back(single(i, 1, comp) + single(i + 1, 1, comp));
  return out;
}

/// α_{2i−1} + 2α_{2i} + α_{2i+1} for 2i+1 ≤ last.
std::vector<RootPattern> triples(int last) {
  std::vector<RootPattern> out;
  for (int i = 1; 2 * i + 1 <= last; ++i) out.push_back(single(2 * i - 1) + single(2 * i, 2) + single(2 * i + 1));
  return out;
}

/// 2α_i for from ≤ i ≤ to.
std::vector<RootPattern> doubles(int from, int to) {
  std::vector<RootPattern> out;
  for (int i = from; i <= to; ++i) out.push_back(single(i, 2));
  return out;
}

/// α_i + α′_i on two copies of the same component.
SystemPattern diagonal(char family, int p) {
  SystemPattern s;
  s.components = {{family, p}, {family, p}};
  for (int i = 1; i <= p; ++i) s.sigma.push_back(single(i, 1, 0) + single(i, 1, 1));
  return s;
}

void add_sp(SystemPattern& s, int from, int to, int comp = 0) {
  for (int i = from; i <= to; ++i) s.sp.push_back({comp, i});
}

void add_sigma(SystemPattern& s, const std::vector<RootPattern>& roots) {
  s.sigma.insert(s.sigma.end(), roots.begin(), roots.end());
}

SystemPattern simple(char family, int n) {
  SystemPattern s;
  s.components = {{family, n}};
  return s;
}

/// A cuspidal rank-1 table row as a one-root system.
SystemPattern from_rank_one(std::string_view label, int n) {
  const RankOneDatum& row = rank_one_row(label);
  SystemPattern s;
  s.components = row.pattern(n);
  RootPattern root;
  const std::vector<int> coeffs = row.coefficients(n);
  for (int i = 0; i < static_cast<int>(coeffs.size()); ++i) root.push_back({0, i + 1, coeffs[i]});
  s.sigma.push_back(root);
  for (int i : row.sp_positions(n)) s.sp.push_back({0, i});
  return s;
}

bool odd(int n) { return n % 2 != 0; }
bool in_e_range(int n) { return n >= 6 && n <= 8; }

std::vector<FamilyDatum> build_catalog() {
  std::vector<FamilyDatum> t;
  auto add = [&t](std::string label, std::vector<std::string> params, std::string constraints,
                  std::function<bool(const Params&)> admissible, std::function<SystemPattern(const Params&)> build,
                  std::function<bool(const Params&)> strict = [](const Params&) { return true; }) {
    FamilyDatum f;
    f.ordinal = static_cast<int>(t.size()) + 1;
    f.label = std::move(label);
    f.params = std::move(params);
    f.constraints = std::move(constraints);
    f.admissible = std::move(admissible);
    f.build = std::move(build);
    f.strict = std::move(strict);
    t.push_back(std::move(f));
  };
  const auto never = [](const Params&) { return false; };
  const auto fixed = [](const Params&) { return true; };

  // Type A.
  add("aa(p,p)", {"p"}, "p≥1", [](const Params& v) { return v[0] >= 1; },
      [](const Params& v) { return diagonal('A', v[0]); });
  add("ao(n)", {"n"}, "n≥1", [](const Params& v) { return v[0] >= 1; },
      [](const Params& v) {
        SystemPattern s = simple('A', v[0]);
        add_sigma(s, doubles(1, v[0]));
        return s;
      });
  add("ac(n)", {"n"}, "n≥3 odd", [](const Params& v) { return v[0] >= 3 && odd(v[0]); },
      [](const Params& v) {
        const int n = v[0];
        SystemPattern s = simple('A', n);
        for (int i = 1; i <= n; i += 2) s.sp.push_back({0, i});
        add_sigma(s, triples(n));
        return s;
      });
  add("aa(p+q+p)", {"p", "q"}, "n=2p+q, p≥1, q≥2", [](const Params& v) { return v[0] >= 1 && v[1] >= 2; },
      [](const Params& v) {
        const int p = v[0], q = v[1], n = 2 * p + q;
        SystemPattern s = simple('A', n);
        add_sp(s, p + 2, p + q - 1);
        for (int i = 1; i <= p; ++i) s.sigma.push_back(single(i) + single(n + 1 - i));
        s.sigma.push_back(chain(p + 1, p + q));
        return s;
      });
  add("aa′(p+1+p)", {"p"}, "n=2p+1, p≥1", [](const Params& v) { return v[0] >= 1; },
      [](const Params& v) {
        const int p = v[0], n = 2 * p + 1;
        SystemPattern s = simple('A', n);
        for (int i = 1; i <= p; ++i) s.sigma.push_back(single(i) + single(n + 1 - i));
        s.sigma.push_back(single(p + 1, 2));
        return s;
      });
  add("a(n)", {"n"}, "n≥2", [](const Params& v) { return v[0] >= 2; },
      [](const Params& v) { return from_rank_one("a(n)", v[0]); });
  add("ac∗(n)", {"n"}, "n≥3", [](const Params& v) { return v[0] >= 3; },
      [](const Params& v) {
        SystemPattern s = simple('A', v[0]);
        add_sigma(s, edges(1, v[0]));
        return s;
      });

  // Type B.
  add("bb(p,p)", {"p"}, "p≥2", [](const Params& v) { return v[0] >= 2; },
      [](const Params& v) { return diagonal('B', v[0]); });
  add("bo(p+q)", {"p", "q"}, "n=p+q, p≥1, q≥1", [](const Params& v) { return v[0] >= 1 && v[1] >= 1; },
      [](const Params& v) {
        const int p = v[0], n = v[0] + v[1];
        SystemPattern s = simple('B', n);
        add_sp(s, p + 2, n);
        add_sigma(s, doubles(1, p));
        s.sigma.push_back(chain(p + 1, n, 2));
        return s;
      });
  add("b(n)", {"n"}, "n≥2", [](const Params& v) { return v[0] >= 2; },
      [](const Params& v) { return from_rank_one("b(n)", v[0]); }, never);
  add("b′(n)", {"n"}, "n≥2", [](const Params& v) { return v[0] >= 2; },
      [](const Params& v) { return from_rank_one("b′(n)", v[0]); });
  add("b∗(n)", {"n"}, "n≥2", [](const Params& v) { return v[0] >= 2; },
      [](const Params& v) { return from_rank_one("b∗(n)", v[0]); });
  add("bc∗(n)", {"n"}, "n≥3", [](const Params& v) { return v[0] >= 3; },
      [](const Params& v) {
        SystemPattern s = simple('B', v[0]);
        add_sigma(s, edges(1, v[0]));
        return s;
      });
  add("bc′(n)", {"n"}, "n≥2", [](const Params& v) { return v[0] >= 2; },
      [](const Params& v) {
        SystemPattern s = simple('B', v[0]);
        add_sigma(s, edges(1, v[0]));
        s.sigma.push_back(single(v[0], 2));
        return s;
      });
  add("a(p)+b(q)", {"p", "q"}, "n=p+q, p≥2, q≥2", [](const Params& v) { return v[0] >= 2 && v[1] >= 2; },
      [](const Params& v) {
        const int p = v[0], n = v[0] + v[1];
        SystemPattern s = simple('B', n);
        add_sp(s, 2, p - 1);
        add_sp(s, p + 2, n);
        s.sigma = {chain(1, p), chain(p + 1, n)};
        return s;
      },
      never);
  add("a(p)+b′(q)", {"p", "q"}, "n=p+q, p≥2, q≥1", [](const Params& v) { return v[0] >= 2 && v[1] >= 1; },
      [](const Params& v) {
        const int p = v[0], n = v[0] + v[1];
        SystemPattern s = simple('B', n);
        add_sp(s, 2, p - 1);
        add_sp(s, p + 2, n);
        s.sigma = {chain(1, p), chain(p + 1, n, 2)};
        return s;
      });
  add("ac∗(p)+b(q)", {"p", "q"}, "n=p+q, p≥2, q≥2", [](const Params& v) { return v[0] >= 2 && v[1] >= 2; },
      [](const Params& v) {
        const int p = v[0], n = v[0] + v[1];
        SystemPattern s = simple('B', n);
        add_sp(s, p + 2, n);
        add_sigma(s, edges(1, p));
        s.sigma.push_back(chain(p + 1, n));
        return s;
      },
      never);
  add("ac∗(p)+b′(q)", {"p", "q"}, "n=p+q, p≥2, q≥1", [](const Params& v) { return v[0] >= 2 && v[1] >= 1; },
      [](const Params& v) {
        const int p = v[0], n = v[0] + v[1];
        SystemPattern s = simple('B', n);
        add_sp(s, p + 2, n);
        add_sigma(s, edges(1, p));
        s.sigma.push_back(chain(p + 1, n, 2));
        return s;
      });
  add("b∗∗(3)", {}, "", fixed, [](const Params&) { return from_rank_one("b∗∗(3)", 3); });
  add("b∗(4)+b∗∗(3)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('B', 4);
    add_sp(s, 2, 3);
    s.sigma = {chain(1, 4), single(2) + single(3, 2) + single(4, 3)};
    return s;
  });

  // Type C.
  add("cc(p,p)", {"p"}, "p≥3", [](const Params& v) { return v[0] >= 3; },
      [](const Params& v) { return diagonal('C', v[0]); });
  add("co(n)", {"n"}, "n≥3", [](const Params& v) { return v[0] >= 3; },
      [](const Params& v) {
        SystemPattern s = simple('C', v[0]);
        add_sigma(s, doubles(1, v[0]));
        return s;
      });
  add("c(n)", {"n"}, "n≥3", [](const Params& v) { return v[0] >= 3; },
      [](const Params& v) { return from_rank_one("c(n)", v[0]); });
  add("cc(p+q)", {"p", "q"}, "n=p+q, p≥2 even, q≥2",
      [](const Params& v) { return v[0] >= 2 && !odd(v[0]) && v[1] >= 2; },
      [](const Params& v) {
        const int p = v[0], n = v[0] + v[1];
        SystemPattern s = simple('C', n);
        for (int i = 1; i <= p + 1; i += 2) s.sp.push_back({0, i});
        add_sp(s, p + 3, n);
        add_sigma(s, triples(p + 1));
        s.sigma.push_back(c_tail(p + 1, n));
        return s;
      },
      [](const Params& v) { return v[1] != 2; });
  add("cc′(p+2)", {"p"}, "n=p+2≥4 even", [](const Params& v) { return v[0] >= 2 && !odd(v[0]); },
      [](const Params& v) {
        const int n = v[0] + 2;
        SystemPattern s = simple('C', n);
        for (int i = 1; i <= n - 1; i += 2) s.sp.push_back({0, i});
        add_sigma(s, triples(n - 1));
        s.sigma.push_back(single(n - 1, 2) + single(n, 2));
        return s;
      });
  add("c∗(n)", {"n"}, "n≥3", [](const Params& v) { return v[0] >= 3; },
      [](const Params& v) { return from_rank_one("c∗(n)", v[0]); });
  add("ca(1+q+1)", {"q"}, "n=q+2, q≥2", [](const Params& v) { return v[0] >= 2; },
      [](const Params& v) {
        const int q = v[0], n = q + 2;
        SystemPattern s = simple('C', n);
        add_sp(s, 3, q);
        s.sigma = {single(1) + single(n), chain(2, n - 1)};
        return s;
      });
  add("aa(1+p+1)+c∗(q)", {"p", "q"}, "n=p+q+1, p≥2, q≥2", [](const Params& v) { return v[0] >= 2 && v[1] >= 2; },
      [](const Params& v) {
        const int p = v[0], n = v[0] + v[1] + 1;
        SystemPattern s = simple('C', n);
        add_sp(s, 3, p);
        add_sp(s, p + 4, n);
        s.sigma = {single(1) + single(p + 2), chain(2, p + 1), c_tail(p + 2, n)};
        return s;
      });
  add("aa(1,1)+c∗(n)", {"n"}, "n≥2 (B2 when n=2)", [](const Params& v) { return v[0] >= 2; },
      [](const Params& v) {
        const int n = v[0];
        SystemPattern s;
        s.components = {{'A', 1}, {'C', n}};
        add_sp(s, 3, n, 1);
        s.sigma = {single(1, 1, 0) + single(1, 1, 1), c_tail(1, n, 1)};
        return s;
      });
  // The two c∗ components are interchangeable, so the pair is taken unordered.
  add("aa(1,1)+c∗(n1)+c∗(n2)", {"n1", "n2"}, "2≤n1≤n2 (B2 when ni=2)",
      [](const Params& v) { return v[0] >= 2 && v[1] >= v[0]; },
      [](const Params& v) {
        SystemPattern s;
        s.components = {{'C', v[0]}, {'C', v[1]}};
        add_sp(s, 3, v[0], 0);
        add_sp(s, 3, v[1], 1);
        s.sigma = {single(1, 1, 0) + single(1, 1, 1), c_tail(1, v[0], 0), c_tail(1, v[1], 1)};
        return s;
      });
  add("ac∗(p)+c∗(q)", {"p", "q"}, "n=p+q−1, p≥2, q≥2", [](const Params& v) { return v[0] >= 2 && v[1] >= 2; },
      [](const Params& v) {
        const int p = v[0], n = v[0] + v[1] - 1;
        SystemPattern s = simple('C', n);
        add_sp(s, p + 2, n);
        add_sigma(s, edges(1, p));
        s.sigma.push_back(c_tail(p, n));
        return s;
      });
  add("a′(1)+c∗(q)", {"q"}, "n=q≥3", [](const Params& v) { return v[0] >= 3; },
      [](const Params& v) {
        const int n = v[0];
        SystemPattern s = simple('C', n);
        add_sp(s, 3, n);
        s.sigma = {single(1, 2), c_tail(1, n)};
        return s;
      });

  // Type D.
  add("dd(p,p)", {"p"}, "p≥4", [](const Params& v) { return v[0] >= 4; },
      [](const Params& v) { return diagonal('D', v[0]); });
  // For q=2 the tail is D2=A1×A1 carrying aa(1,1), which needs S^p to avoid it.
  add("do(p+q)", {"p", "q"}, "n=p+q≥4, p≥1, q≥2",
      [](const Params& v) { return v[0] >= 1 && v[1] >= 2 && v[0] + v[1] >= 4; },
      [](const Params& v) {
        const int p = v[0], q = v[1], n = p + q;
        SystemPattern s = simple('D', n);
        if (q > 2) add_sp(s, p + 2, n);
        add_sigma(s, doubles(1, p));
        s.sigma.push_back(d_tail(p + 1, n));
        return s;
      });
  add("do(n)", {"n"}, "n≥4", [](const Params& v) { return v[0] >= 4; },
      [](const Params& v) {
        SystemPattern s = simple('D', v[0]);
        add_sigma(s, doubles(1, v[0]));
        return s;
      });
  add("d(n)", {"n"}, "n≥4", [](const Params& v) { return v[0] >= 4; },
      [](const Params& v) { return from_rank_one("d(n)", v[0]); });
  add("dc′(n)", {"n"}, "n≥6 even", [](const Params& v) { return v[0] >= 6 && !odd(v[0]); },
      [](const Params& v) {
        const int n = v[0];
        SystemPattern s = simple('D', n);
        for (int i = 1; i <= n - 1; i += 2) s.sp.push_back({0, i});
        add_sigma(s, triples(n - 1));
        s.sigma.push_back(single(n, 2));
        return s;
      });
  add("dc(n)", {"n"}, "n≥5 odd", [](const Params& v) { return v[0] >= 5 && odd(v[0]); },
      [](const Params& v) {
        const int n = v[0];
        SystemPattern s = simple('D', n);
        for (int i = 1; i <= n - 2; i += 2) s.sp.push_back({0, i});
        add_sigma(s, triples(n - 2));
        s.sigma.push_back(chain(n - 2, n));
        return s;
      });
  add("ds(n)", {"n"}, "n≥4", [](const Params& v) { return v[0] >= 4; },
      [](const Params& v) {
        const int n = v[0];
        SystemPattern s = simple('D', n);
        add_sp(s, 2, n - 2);
        s.sigma = {chain(1, n - 1), chain(1, n - 2) + single(n)};
        return s;
      });
  add("ds∗(4)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('D', 4);
    s.sp = {{0, 2}};
    s.sigma = {chain(1, 3), chain(2, 4), single(1) + single(2) + single(4)};
    return s;
  });
  add("dc∗(n)", {"n"}, "n≥4", [](const Params& v) { return v[0] >= 4; },
      [](const Params& v) {
        const int n = v[0];
        SystemPattern s = simple('D', n);
        add_sigma(s, edges(1, n - 1));
        s.sigma.push_back(single(n - 2) + single(n));
        return s;
      });
  add("a(p)+d(q)", {"p", "q"}, "n=p+q, p≥2, q≥2", [](const Params& v) { return v[0] >= 2 && v[1] >= 2; },
      [](const Params& v) {
        const int p = v[0], q = v[1], n = p + q;
        SystemPattern s = simple('D', n);
        add_sp(s, 2, p - 1);
        if (q > 2) add_sp(s, p + 2, n);
        s.sigma = {chain(1, p), d_tail(p + 1, n)};
        return s;
      });
  add("ac∗(p)+d(q)", {"p", "q"}, "n=p+q, p≥2, q≥2", [](const Params& v) { return v[0] >= 2 && v[1] >= 2; },
      [](const Params& v) {
        const int p = v[0], q = v[1], n = p + q;
        SystemPattern s = simple('D', n);
        if (q > 2) add_sp(s, p + 2, n);
        add_sigma(s, edges(1, p));
        s.sigma.push_back(d_tail(p + 1, n));
        return s;
      });

  // Type E.
  const auto ef6_roots = [] {
    return std::vector<RootPattern>{single(1, 2) + single(2) + single(3, 2) + single(4, 2) + single(5),
                                    single(2) + single(3) + single(4, 2) + single(5, 2) + single(6, 2)};
  };
  add("ee(p,p)", {"p"}, "p=6,7,8", [](const Params& v) { return in_e_range(v[0]); },
      [](const Params& v) { return diagonal('E', v[0]); });
  add("eo(n)", {"n"}, "n=6,7,8", [](const Params& v) { return in_e_range(v[0]); },
      [](const Params& v) {
        SystemPattern s = simple('E', v[0]);
        add_sigma(s, doubles(1, v[0]));
        return s;
      });
  add("ea(6)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('E', 6);
    s.sigma = {single(1) + single(6), single(3) + single(5), single(2, 2), single(4, 2)};
    return s;
  });
  add("ed(6)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('E', 6);
    add_sp(s, 3, 5);
    s.sigma = {single(1) + chain(3, 6), single(2, 2) + single(3) + single(4, 2) + single(5)};
    return s;
  });
  add("ef(6)", {}, "", fixed, [ef6_roots](const Params&) {
    SystemPattern s = simple('E', 6);
    add_sp(s, 2, 5);
    s.sigma = ef6_roots();
    return s;
  });
  add("ec(7)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('E', 7);
    s.sp = {{0, 2}, {0, 5}, {0, 7}};
    s.sigma = {single(1, 2), single(3, 2), single(2) + single(4, 2) + single(5), single(5) + single(6, 2) + single(7)};
    return s;
  });
  add("ef(n)", {"n"}, "n=7,8", [](const Params& v) { return v[0] == 7 || v[0] == 8; },
      [ef6_roots](const Params& v) {
        SystemPattern s = simple('E', v[0]);
        add_sp(s, 2, 5);
        s.sigma = ef6_roots();
        add_sigma(s, doubles(7, v[0]));
        return s;
      });
  add("ec∗(n)", {"n"}, "n=6,7,8", [](const Params& v) { return in_e_range(v[0]); },
      [](const Params& v) {
        SystemPattern s = simple('E', v[0]);
        s.sigma = {single(1) + single(3), single(2) + single(4)};
        add_sigma(s, edges(3, v[0]));
        return s;
      });
  add("ef(6)+a(2)", {}, "", fixed, [ef6_roots](const Params&) {
    SystemPattern s = simple('E', 8);
    add_sp(s, 2, 5);
    s.sigma = ef6_roots();
    s.sigma.push_back(single(7) + single(8));
    return s;
  });
  add("aa(2,2)+a(2)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('E', 6);
    s.sigma = {single(1) + single(6), single(3) + single(5), single(2) + single(4)};
    return s;
  });
  add("ac(5)+a(2)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('E', 7);
    s.sp = {{0, 2}, {0, 5}, {0, 7}};
    s.sigma = {single(1) + single(3), single(2) + single(4, 2) + single(5), single(5) + single(6, 2) + single(7)};
    return s;
  });

  // Type F.
  add("ff(4,4)", {}, "", fixed, [](const Params&) { return diagonal('F', 4); });
  add("fo(4)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('F', 4);
    add_sigma(s, doubles(1, 4));
    return s;
  });
  add("f(4)", {}, "", fixed, [](const Params&) { return from_rank_one("f(4)", 4); });
  add("fa(1+2+1)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('F', 4);
    s.sigma = {single(1) + single(4), single(2) + single(3)};
    return s;
  });
  add("fd(4)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('F', 4);
    s.sp = {{0, 2}};
    s.sigma = {chain(1, 3), single(2) + single(3, 2) + single(4)};
    return s;
  });
  add("ao(2)+a(2)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('F', 4);
    s.sigma = {single(1) + single(2), single(3, 2), single(4, 2)};
    return s;
  });
  add("fc∗(4)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('F', 4);
    add_sigma(s, edges(1, 4));
    return s;
  });

  // Type G.
  add("gg(2,2)", {}, "", fixed, [](const Params&) { return diagonal('G', 2); });
  add("go(2)", {}, "", fixed, [](const Params&) {
    SystemPattern s = simple('G', 2);
    add_sigma(s, doubles(1, 2));
    return s;
  });
  add("g(2)", {}, "", fixed, [](const Params&) { return from_rank_one("g(2)", 2); }, never);
  add("g′(2)", {}, "", fixed, [](const Params&) { return from_rank_one("g′(2)", 2); });
  add("g∗(2)", {}, "", fixed, [](const Params&) { return from_rank_one("g∗(2)", 2); });
  return t;
}

bool token_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) != 0; }

int pattern_rank(const SystemPattern& p) {
  int r = 0;
  for (const Component& c : p.components) r += c.rank;
  return r;
}

/// Tuples in {1..bound}^arity in lexicographic order.
void for_each_tuple(int arity, int bound, const std::function<void(const Params&)>& f) {
  Params v(arity, 1);
  while (true) {
    f(v);
    int i = arity - 1;
    while (i >= 0 && v[i] == bound) v[i--] = 1;
    if (i < 0) return;
    ++v[i];
  }
}

}  // namespace

std::string FamilyDatum::instance_label(const Params& values) const {
  std::string out;
  for (std::size_t pos = 0; pos < label.size();) {
    bool replaced = false;
    if (pos == 0 || !token_char(label[pos - 1])) {
      for (std::size_t k = 0; k < params.size() && k < values.size(); ++k) {
        const std::string& name = params[k];
        const std::size_t end = pos + name.size();
        if (label.compare(pos, name.size(), name) == 0 && (end == label.size() || !token_char(label[end]))) {
          out += std::to_string(values[k]);
          pos = end;
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) out += label[pos++];
  }
  return out;
}

const std::vector<FamilyDatum>& family_catalog() {
  static const std::vector<FamilyDatum> catalog = build_catalog();
  return catalog;
}

const FamilyDatum& family(std::string_view label) {
  const std::string key = normalize_label(label);
  for (const FamilyDatum& f : family_catalog())
    if (f.label == key) return f;
  throw ParameterError("unknown family label '" + std::string(label) + "'");
}

SphericalSystem realize(const SystemPattern& pattern) {
  const DynkinDiagram::Embedding e = DynkinDiagram::embed(pattern.components);
  const auto node = [&](int comp, int index) {
    if (comp < 0 || comp >= static_cast<int>(e.node_of.size()) || index < 1 ||
        index > static_cast<int>(e.node_of[comp].size()))
      throw ParameterError("pattern node (" + std::to_string(comp) + "," + std::to_string(index) + ") out of range");
    return e.node_of[comp][index - 1];
  };
  NodeSet sp;
  for (const auto& [comp, index] : pattern.sp) sp.insert(node(comp, index));
  std::vector<Weight> sigma;
  for (const RootPattern& root : pattern.sigma) {
    Weight w = e.diagram.zero_weight();
    for (const Term& t : root) w[node(t.component, t.index)] += t.coeff;
    sigma.push_back(w);
  }
  return SphericalSystem(e.diagram, sp, std::move(sigma));
}

SphericalSystem instantiate(const FamilyDatum& family, const Params& values) {
  if (values.size() != family.params.size())
    throw ParameterError(family.label + " takes " + std::to_string(family.params.size()) + " parameter(s), got " +
                         std::to_string(values.size()));
  if (!family.admissible(values))
    throw ParameterError("parameters not admissible for " + family.label + " (" + family.constraints + ")");
  return realize(family.build(values));
}

SphericalSystem instantiate(std::string_view label, const Params& values) {
  return instantiate(family(label), values);
}

std::vector<FamilyInstance> catalog_instances(int max_rank) {
  std::vector<FamilyInstance> out;
  for (const FamilyDatum& f : family_catalog()) {
    for_each_tuple(static_cast<int>(f.params.size()), std::max(max_rank, 1), [&](const Params& v) {
      if (f.admissible(v) && pattern_rank(f.build(v)) <= max_rank) out.push_back({&f, v});
    });
  }
  return out;
}

std::vector<FamilyInstance> catalog_instances_on(const DynkinDiagram& d) {
  std::vector<FamilyInstance> out;
  for (const FamilyDatum& f : family_catalog()) {
    for_each_tuple(static_cast<int>(f.params.size()), std::max(d.rank(), 1), [&](const Params& v) {
      if (!f.admissible(v)) return;
      const SystemPattern p = f.build(v);
      if (pattern_rank(p) == d.rank() && DynkinDiagram::build(p.components) == d) out.push_back({&f, v});
    });
  }
  return out;
}

}  // namespace wonderful

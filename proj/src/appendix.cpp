#include "wonderful/appendix.hpp"

#include <algorithm>

#include "wonderful/dictionary.hpp"
#include "wonderful/error.hpp"

namespace wonderful {

namespace {

RootPattern single(int i, int coeff = 1, int comp = 0) { return {Term{comp, i, coeff}}; }

/// coeff·(α_from + … + α_to); empty when from > to.
RootPattern chain(int from, int to, int coeff = 1) {
  RootPattern r;
  for (int i = from; i <= to; ++i) r.push_back({0, i, coeff});
  return r;
}

RootPattern operator+(RootPattern a, const RootPattern& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

SystemPattern simple(char family, int n, std::vector<RootPattern> sigma) {
  SystemPattern s;
  s.components = {{family, n}};
  s.sigma = std::move(sigma);
  return s;
}

/// 2α_from, …, 2α_to.
std::vector<RootPattern> doubles(int from, int to) {
  std::vector<RootPattern> out;
  for (int i = from; i <= to; ++i) out.push_back(single(i, 2));
  return out;
}

/// α_{2i−1} + 2α_{2i} + α_{2i+1} for 2i+1 ≤ last.
std::vector<RootPattern> triples(int last) {
  std::vector<RootPattern> out;
  for (int i = 1; 2 * i + 1 <= last; ++i) out.push_back(single(2 * i - 1) + single(2 * i, 2) + single(2 * i + 1));
  return out;
}

std::vector<RootPattern> operator+(std::vector<RootPattern> a, const std::vector<RootPattern>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool odd(int n) { return n % 2 != 0; }

std::vector<SymmetricDatum> build_symmetric() {
  std::vector<SymmetricDatum> t;
  auto add = [&t](std::string label, std::string sub, std::vector<std::string> params, std::string constraints,
                  std::function<bool(const Params&)> admissible, std::function<SystemPattern(const Params&)> basis,
                  std::string type, std::string h, std::string family,
                  std::function<Params(const Params&)> family_params, Params minimal) {
    t.push_back({std::move(label), std::move(sub), std::move(params), std::move(constraints), std::move(admissible),
                 std::move(basis), std::move(type), std::move(h), std::move(family), std::move(family_params),
                 std::move(minimal)});
  };
  const auto none = [](const Params&) { return Params{}; };
  const auto same = [](const Params& v) { return v; };
  const auto fixed = [](const Params&) { return true; };
  const auto group = [](char family) {
    return [family](const Params& v) {
      SystemPattern s;
      s.components = {{family, v[0]}, {family, v[0]}};
      for (int i = 1; i <= v[0]; ++i) s.sigma.push_back(single(i, 1, 0) + single(i, 1, 1));
      return s;
    };
  };

  add("A×A", "", {"p"}, "p≥1", [](const Params& v) { return v[0] >= 1; }, group('A'), "A_p", "sl(p+1)", "aa(p,p)",
      same, {1});
  add("B×B", "", {"p"}, "p≥2", [](const Params& v) { return v[0] >= 2; }, group('B'), "B_p", "so(2p+1)", "bb(p,p)",
      same, {2});
  add("C×C", "", {"p"}, "p≥3", [](const Params& v) { return v[0] >= 3; }, group('C'), "C_p", "sp(2p)", "cc(p,p)",
      same, {3});
  add("D×D", "", {"p"}, "p≥4", [](const Params& v) { return v[0] >= 4; }, group('D'), "D_p", "so(2p)", "dd(p,p)",
      same, {4});
  add("E×E", "", {"p"}, "p=6,7,8", [](const Params& v) { return v[0] >= 6 && v[0] <= 8; }, group('E'), "E_p", "e_p",
      "ee(p,p)", same, {6});
  add("F×F", "", {}, "", fixed, [group](const Params&) { return group('F')({4}); }, "F4", "f4", "ff(4,4)", none, {});
  add("G×G", "", {}, "", fixed, [group](const Params&) { return group('G')({2}); }, "G2", "g2", "gg(2,2)", none, {});

  add("A I", "", {"n"}, "n≥1", [](const Params& v) { return v[0] >= 1; },
      [](const Params& v) { return simple('A', v[0], doubles(1, v[0])); }, "A_n", "so(n+1)", "ao(n)", same, {1});
  add("A II", "", {"n"}, "n≥3 odd", [](const Params& v) { return v[0] >= 3 && odd(v[0]); },
      [](const Params& v) { return simple('A', v[0], triples(v[0])); }, "A_{(n-1)/2}", "sp(n+1)", "ac(n)", same, {3});
  const auto mirror_pairs = [](int p, int n) {
    std::vector<RootPattern> out;
    for (int i = 1; i <= p; ++i) out.push_back(single(i) + single(n + 1 - i));
    return out;
  };
  add("A III", "q≥2", {"p", "q"}, "n=2p+q, p≥1, q≥2", [](const Params& v) { return v[0] >= 1 && v[1] >= 2; },
      [mirror_pairs](const Params& v) {
        const int n = 2 * v[0] + v[1];
        return simple('A', n, mirror_pairs(v[0], n) + std::vector<RootPattern>{chain(v[0] + 1, v[0] + v[1])});
      },
      "BC_{p+1}", "sl(p+1)+sl(p+q)+gl(1)", "aa(p+q+p)", same, {1, 2});
  add("A III", "q=1", {"p", "q"}, "n=2p+1, p≥1, q=1", [](const Params& v) { return v[0] >= 1 && v[1] == 1; },
      [mirror_pairs](const Params& v) {
        const int n = 2 * v[0] + 1;
        return simple('A', n, mirror_pairs(v[0], n) + std::vector<RootPattern>{single(v[0] + 1, 2)});
      },
      "C_{p+1}", "sl(p+1)+sl(p+1)+gl(1)", "aa′(p+1+p)", [](const Params& v) { return Params{v[0]}; }, {1, 1});
  add("A IV", "n≥2", {"n"}, "n≥2", [](const Params& v) { return v[0] >= 2; },
      [](const Params& v) { return simple('A', v[0], {chain(1, v[0])}); }, "A_1", "gl(n)", "a(n)", same, {2});
  add("A IV", "n=1", {"n"}, "n=1", [](const Params& v) { return v[0] == 1; },
      [](const Params&) { return simple('A', 1, {single(1, 2)}); }, "A_1", "gl(1)", "ao(n)", same, {1});

  add("B I", "", {"p", "q"}, "n=p+q, p≥1, q≥1", [](const Params& v) { return v[0] >= 1 && v[1] >= 1; },
      [](const Params& v) {
        const int n = v[0] + v[1];
        return simple('B', n, doubles(1, v[0]) + std::vector<RootPattern>{chain(v[0] + 1, n, 2)});
      },
      "B_{p+1}", "so(p+1)+so(2n-p)", "bo(p+q)", same, {1, 1});
  add("B II", "", {"n"}, "n≥2", [](const Params& v) { return v[0] >= 2; },
      [](const Params& v) { return simple('B', v[0], {chain(1, v[0], 2)}); }, "A_1", "so(2n)", "b′(n)", same, {2});

  add("C I", "", {"n"}, "n≥3", [](const Params& v) { return v[0] >= 3; },
      [](const Params& v) { return simple('C', v[0], doubles(1, v[0])); }, "C_n", "gl(n)", "co(n)", same, {3});
  const auto c_ii_long = [](const Params& v) {
    const int p = v[0];
    const int n = p + v[1];
    return simple('C', n, triples(p + 1) + std::vector<RootPattern>{single(p + 1) + chain(p + 2, n - 1, 2) + single(n)});
  };
  add("C II", "p=0, q≥3", {"p", "q"}, "n=q≥3, p=0", [](const Params& v) { return v[0] == 0 && v[1] >= 3; },
      c_ii_long, "BC_1", "sp(2)+sp(2n-2)", "c(n)", [](const Params& v) { return Params{v[1]}; }, {0, 3});
  add("C II", "p≥2, q≥3", {"p", "q"}, "n=p+q, p≥2 even, q≥3",
      [](const Params& v) { return v[0] >= 2 && !odd(v[0]) && v[1] >= 3; }, c_ii_long, "BC_{(p/2)+1}",
      "sp(p+2)+sp(2n-p-2)", "cc(p+q)", same, {2, 3});
  add("C II", "q=2", {"p", "q"}, "n=p+2, p≥2 even, q=2",
      [](const Params& v) { return v[0] >= 2 && !odd(v[0]) && v[1] == 2; },
      [](const Params& v) {
        const int n = v[0] + 2;
        return simple('C', n, triples(n - 1) + std::vector<RootPattern>{single(n - 1, 2) + single(n, 2)});
      },
      "C_{(p/2)+1}", "sp(n)+sp(n)", "cc′(p+2)", [](const Params& v) { return Params{v[0]}; }, {2, 2});

  add("D I", "q≥2", {"p", "q"}, "n=p+q≥4, p≥1, q≥2",
      [](const Params& v) { return v[0] >= 1 && v[1] >= 2 && v[0] + v[1] >= 4; },
      [](const Params& v) {
        const int n = v[0] + v[1];
        return simple('D', n,
                      doubles(1, v[0]) + std::vector<RootPattern>{chain(v[0] + 1, n - 2, 2) + single(n - 1) + single(n)});
      },
      "B_{p+1}", "so(p+1)+so(2n-p-1)", "do(p+q)", same, {1, 3});
  add("D I", "q=0", {"p", "q"}, "n=p≥4, q=0", [](const Params& v) { return v[0] >= 4 && v[1] == 0; },
      [](const Params& v) { return simple('D', v[0], doubles(1, v[0])); }, "D_n", "so(n)+so(n)", "do(n)",
      [](const Params& v) { return Params{v[0]}; }, {4, 0});
  add("D II", "", {"n"}, "n≥4", [](const Params& v) { return v[0] >= 4; },
      [](const Params& v) { return simple('D', v[0], {chain(1, v[0] - 2, 2) + single(v[0] - 1) + single(v[0])}); },
      "A_1", "so(2n-1)", "d(n)", same, {4});
  add("D III", "n even", {"n"}, "n≥6 even", [](const Params& v) { return v[0] >= 6 && !odd(v[0]); },
      [](const Params& v) { return simple('D', v[0], triples(v[0] - 1) + std::vector<RootPattern>{single(v[0], 2)}); },
      "C_{n/2}", "gl(n)", "dc′(n)", same, {6});
  add("D III", "n odd", {"n"}, "n≥5 odd", [](const Params& v) { return v[0] >= 5 && odd(v[0]); },
      [](const Params& v) {
        const int n = v[0];
        return simple('D', n, triples(n - 2) + std::vector<RootPattern>{chain(n - 2, n)});
      },
      "BC_{(n-1)/2}", "gl(n)", "dc(n)", same, {5});

  const RootPattern e_first = single(1, 2) + single(3, 2) + single(4, 2) + single(2) + single(5);
  const RootPattern e_second = single(2) + single(3) + single(4, 2) + single(5, 2) + single(6, 2);
  const auto exceptional = [&add](std::string label, char family, int n, std::vector<RootPattern> sigma,
                                  std::string type, std::string h, std::string target, Params target_params) {
    add(std::move(label), "", {}, "", [](const Params&) { return true; },
        [family, n, sigma](const Params&) { return simple(family, n, sigma); }, std::move(type), std::move(h),
        std::move(target), [target_params](const Params&) { return target_params; }, {});
  };
  exceptional("E I", 'E', 6, doubles(1, 6), "E_6", "sp(8)", "eo(n)", {6});
  exceptional("E II", 'E', 6, {single(1) + single(6), single(3) + single(5), single(2, 2), single(4, 2)}, "F_4",
              "sl(6)+sl(2)", "ea(6)", {});
  exceptional("E III", 'E', 6,
              {single(1) + single(3) + single(4) + single(5) + single(6),
               single(2, 2) + single(4, 2) + single(3) + single(5)},
              "BC_2", "so(10)+gl(1)", "ed(6)", {});
  exceptional("E IV", 'E', 6, {e_first, e_second}, "A_2", "f4", "ef(6)", {});
  exceptional("E V", 'E', 7, doubles(1, 7), "E_7", "sl(8)", "eo(n)", {7});
  exceptional("E VI", 'E', 7,
              {single(1, 2), single(3, 2), single(2) + single(4, 2) + single(5), single(5) + single(6, 2) + single(7)},
              "F_4", "so(12)+sl(2)", "ec(7)", {});
  exceptional("E VII", 'E', 7, {e_first, e_second, single(7, 2)}, "C_3", "e6+gl(1)", "ef(n)", {7});
  exceptional("E VIII", 'E', 8, doubles(1, 8), "E_8", "so(16)", "eo(n)", {8});
  exceptional("E IX", 'E', 8, {e_first, e_second, single(7, 2), single(8, 2)}, "F_4", "e7+sl(2)", "ef(n)", {8});
  exceptional("F I", 'F', 4, doubles(1, 4), "F_4", "sp(6)+sl(2)", "fo(4)", {});
  exceptional("F II", 'F', 4, {single(1) + single(2, 2) + single(3, 3) + single(4, 2)}, "BC_1", "so(9)", "f(4)", {});
  exceptional("G", 'G', 2, doubles(1, 2), "G_2", "sl(2)+sl(2)", "go(2)", {});
  return t;
}

/// Every S^p turning (S^p, Σ) into a valid system.
std::vector<NodeSet> valid_sp_choices(const DynkinDiagram& d, const std::vector<Weight>& sigma) {
  std::vector<NodeSet> out;
  const std::uint64_t subsets = std::uint64_t{1} << d.rank();
  for (std::uint64_t bits = 0; bits < subsets; ++bits)
    if (SphericalSystem(d, NodeSet(bits), sigma).valid()) out.push_back(NodeSet(bits));
  return out;
}

/// Symmetric spaces are affine, so when Σ alone leaves S^p ambiguous (c(n) against c∗(n)
/// share their root) only the affine-feasible choices are kept.
SphericalSystem with_unique_sp(const SphericalSystem& basis, std::string_view what) {
  std::vector<NodeSet> choices = valid_sp_choices(basis.diagram(), basis.sigma());
  if (choices.size() > 1)
    std::erase_if(choices, [&](NodeSet sp) {
      return !is_affine_feasible(SphericalSystem(basis.diagram(), sp, basis.sigma()));
    });
  if (choices.size() != 1)
    throw PreconditionError(std::string(what) + ": " + std::to_string(choices.size()) +
                            " choices of S^p give a valid affine system, expected exactly one");
  return SphericalSystem(basis.diagram(), choices.front(), basis.sigma());
}

std::string row_name(const SymmetricDatum& row) {
  return row.case_label.empty() ? row.cartan_label : row.cartan_label + " (" + row.case_label + ")";
}

SphericalSystem symmetric_basis(std::string_view label, const Params& values) {
  return realize(symmetric_row(label, values).basis(values));
}

void check_characteristic(const DynkinDiagram& d, const Characteristic& h) {
  if (static_cast<int>(h.size()) != d.rank())
    throw ParameterError("characteristic has " + std::to_string(h.size()) + " entries, diagram " + d.to_string() +
                         " has rank " + std::to_string(d.rank()));
  for (int x : h)
    if (x < 0 || x > 2) throw ParameterError("characteristic entries must lie in {0,1,2}");
}

std::vector<OrbitDatum> build_height3() {
  std::vector<OrbitDatum> t;
  auto add = [&t](std::string group, char family, std::vector<std::string> params, std::string constraints,
                  std::function<bool(const Params&)> admissible, std::function<int(const Params&)> rank,
                  std::function<Characteristic(const Params&)> characteristic,
                  std::function<std::vector<int>(const Params&)> partition, std::string k, std::string module,
                  Params minimal) {
    t.push_back({std::move(group), family, std::move(params), std::move(constraints), std::move(admissible),
                 std::move(rank), std::move(characteristic), std::move(partition), std::move(k), std::move(module),
                 std::move(minimal)});
  };
  const auto ones_at = [](int n, std::vector<int> positions) {
    Characteristic h(n, 0);
    for (int p : positions) h[p - 1] = 1;
    return h;
  };
  /// (3, 2^{2r}, 1^{ones}).
  const auto blocks = [](int r, int ones) {
    std::vector<int> out{3};
    out.insert(out.end(), 2 * r, 2);
    out.insert(out.end(), ones, 1);
    return out;
  };
  const auto r_positive = [](const Params& v) { return v[0] >= 1; };
  const auto rs_positive = [](const Params& v) { return v[0] >= 1 && v[1] >= 1; };
  const auto no_partition = [](const Params&) { return std::vector<int>{}; };

  add("B_{2r+1}", 'B', {"r"}, "r≥1", r_positive, [](const Params& v) { return 2 * v[0] + 1; },
      [ones_at](const Params& v) { return ones_at(2 * v[0] + 1, {1, 2 * v[0] + 1}); },
      [blocks](const Params& v) { return blocks(v[0], 0); }, "sp(2r)", "V(ω1)", {1});
  add("B_{2r+s+1}", 'B', {"r", "s"}, "r≥1, s≥1", rs_positive, [](const Params& v) { return 2 * v[0] + v[1] + 1; },
      [ones_at](const Params& v) { return ones_at(2 * v[0] + v[1] + 1, {1, 2 * v[0] + 1}); },
      [blocks](const Params& v) { return blocks(v[0], 2 * v[1]); }, "sp(2r)+so(2s)", "V(ω1)", {1, 1});
  add("D_{2r+2}", 'D', {"r"}, "r≥1", r_positive, [](const Params& v) { return 2 * v[0] + 2; },
      [ones_at](const Params& v) {
        const int n = 2 * v[0] + 2;
        return ones_at(n, {1, n - 1, n});
      },
      [blocks](const Params& v) { return blocks(v[0], 1); }, "sp(2r)", "V(ω1)", {1});
  add("D_{2r+s+2}", 'D', {"r", "s"}, "r≥1, s≥1", rs_positive, [](const Params& v) { return 2 * v[0] + v[1] + 2; },
      [ones_at](const Params& v) { return ones_at(2 * v[0] + v[1] + 2, {1, 2 * v[0] + 1}); },
      [blocks](const Params& v) { return blocks(v[0], 2 * v[1] + 1); }, "sp(2r)+so(2s+1)", "V(ω1)", {1, 1});
  const auto exceptional = [&](char family, Characteristic h, std::string k, std::string module) {
    const int n = static_cast<int>(h.size());
    add(std::string(1, family) + "_" + std::to_string(n), family, {}, "", [](const Params&) { return true; },
        [n](const Params&) { return n; }, [h](const Params&) { return h; }, no_partition, std::move(k),
        std::move(module), {});
  };
  exceptional('E', {0, 0, 0, 1, 0, 0}, "sl(3)+sl(2)", "V(ω1′)");
  exceptional('E', {0, 0, 1, 0, 0, 0, 0}, "sl(2)+sp(6)", "V(ω1)");
  exceptional('E', {0, 1, 0, 0, 0, 0, 1}, "sp(6)", "V(ω1)");
  exceptional('E', {0, 0, 0, 0, 0, 0, 1, 0}, "f4+sl(2)", "V(ω1′)");
  exceptional('E', {0, 1, 0, 0, 0, 0, 0, 0}, "sp(8)", "V(ω1)");
  exceptional('F', {0, 1, 0, 0}, "sl(2)+so(3)", "V(ω1)");
  exceptional('G', {1, 0}, "sl(2)", "V(ω1)");
  return t;
}

std::vector<ModelDatum> build_model() {
  const auto n_only = [](int n) { return Params{n}; };
  const auto none = [](int) { return Params{}; };
  return {
      {'A', "even", "simply connected", "Sp(n)×GL1", "ac∗(n)", n_only, 3, 0},
      {'A', "odd", "simply connected", "parabolic of semisimple type C_{(n-1)/2} of the symmetric subgroup A II",
       "ac∗(n)", n_only, 3, 0},
      {'B', "even", "simply connected",
       "inside the parabolic of semisimple type A_{n-1} of B II, same radical, semisimple type C_{n/2}", "bc∗(n)",
       n_only, 3, 0},
      {'B', "odd", "simply connected", "normaliser of the stabiliser of the nilpotent element (10…01)", "bc∗(n)",
       n_only, 3, 0},
      {'B', "any", "adjoint", "model subgroup for the adjoint group", "bc′(n)", n_only, 2, 0},
      {'C', "even", "simply connected",
       "parabolic of semisimple type C_{(n/2)-1}×C_{n/2} of the symmetric subgroup C II with q=2", "ac∗(p)+c∗(q)",
       [](int n) { return Params{n - 1, 2}; }, 3, 0},
      {'C', "odd", "simply connected",
       "parabolic of semisimple type C_{(n-1)/2}×C_{(n-1)/2} of the symmetric subgroup C II with q=3",
       "ac∗(p)+c∗(q)", [](int n) { return Params{n - 1, 2}; }, 3, 0},
      {'D', "even", "simply connected", "normaliser of the stabiliser of the nilpotent element (10…011)", "dc∗(n)",
       n_only, 4, 0},
      {'D', "odd", "simply connected",
       "inside the parabolic of semisimple type A_{n-2} of D II, same radical, semisimple type C_{(n-1)/2}", "dc∗(n)",
       n_only, 4, 0},
      {'E', "any", "simply connected", "parabolic of semisimple type C_3 of the symmetric subgroup E IV", "ec∗(n)",
       n_only, 6, 6},
      {'E', "any", "simply connected", "normaliser of the stabiliser of the nilpotent element (010…01)", "ec∗(n)",
       n_only, 7, 7},
      {'E', "any", "simply connected", "normaliser of the stabiliser of the nilpotent element (010…0)", "ec∗(n)",
       n_only, 8, 8},
      {'F', "any", "simply connected", "parabolic of semisimple type A_1×B_2 of the symmetric subgroup F I", "fc∗(4)",
       none, 4, 4},
      {'G', "any", "simply connected", "normaliser of the stabiliser of the nilpotent element (10)", "g∗(2)", none, 2,
       2},
  };
}

}  // namespace

const std::vector<SymmetricDatum>& symmetric_table() {
  static const std::vector<SymmetricDatum> table = build_symmetric();
  return table;
}

const SymmetricDatum& symmetric_row(std::string_view label, const Params& values) {
  bool known = false;
  for (const SymmetricDatum& row : symmetric_table()) {
    if (row.cartan_label != label) continue;
    known = true;
    if (row.params.size() == values.size() && row.admissible(values)) return row;
  }
  if (!known) throw ParameterError("unknown symmetric label '" + std::string(label) + "'");
  throw ParameterError("parameters not admissible for symmetric label '" + std::string(label) + "'");
}

SphericalSystem symmetric_system(std::string_view label, const Params& values) {
  return with_unique_sp(symmetric_basis(label, values), row_name(symmetric_row(label, values)));
}

SphericalSystem halved_symmetric_system(std::string_view label, const Params& values) {
  const SymmetricDatum& row = symmetric_row(label, values);
  if (row.cartan_label != "B II" && !(row.cartan_label == "C II" && row.case_label == "q=2"))
    throw ParameterError("the halved companion exists only for B II and C II with q=2");
  const SphericalSystem basis = symmetric_basis(label, values);
  std::vector<Weight> sigma;
  for (const Weight& g : basis.sigma()) {
    const bool halve = support(g).size() > 1 && g.unaryExpr([](int c) { return c % 2; }).isZero();
    sigma.push_back(halve ? Weight(g / 2) : g);
  }
  return with_unique_sp(SphericalSystem(basis.diagram(), NodeSet{}, std::move(sigma)), row_name(row) + " halved");
}

std::map<int, int> grading_dims(const DynkinDiagram& d, const Characteristic& h) {
  check_characteristic(d, h);
  std::map<int, int> dims;
  dims[0] = d.rank();
  for (const Weight& root : d.positive_roots()) {
    int level = 0;
    for (int i = 0; i < d.rank(); ++i) level += root[i] * h[i];
    ++dims[level];
    ++dims[-level];
  }
  return dims;
}

int height(const DynkinDiagram& d, const Characteristic& h) { return grading_dims(d, h).rbegin()->first; }

bool is_spherical_orbit(const DynkinDiagram& d, const Characteristic& h) {
  const int m = height(d, h);
  return m == 2 || m == 3;
}

OrbitDims orbit_dims(const DynkinDiagram& d, const Characteristic& h) {
  const std::map<int, int> g = grading_dims(d, h);
  const auto at = [&g](int i) {
    const auto it = g.find(i);
    return it == g.end() ? 0 : it->second;
  };
  OrbitDims out;
  out.dim_h = at(0) + at(1);
  out.dim_hu = at(1) + at(2);
  out.dim_orbit = dim_lie_algebra(d) - out.dim_h;
  return out;
}

DynkinDiagram OrbitDatum::diagram(const Params& values) const {
  if (values.size() != params.size() || !admissible(values))
    throw ParameterError("parameters not admissible for orbit row " + group);
  return DynkinDiagram::build({{family, rank(values)}});
}

const std::vector<OrbitDatum>& height3_table() {
  static const std::vector<OrbitDatum> table = build_height3();
  return table;
}

bool ModelDatum::admits(int n) const {
  if (n < min_rank || (max_rank != 0 && n > max_rank)) return false;
  if (parity == "even") return n % 2 == 0;
  if (parity == "odd") return n % 2 != 0;
  return true;
}

const std::vector<ModelDatum>& model_table() {
  static const std::vector<ModelDatum> table = build_model();
  return table;
}

}  // namespace wonderful

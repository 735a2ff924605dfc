#include "wonderful/rank_one.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "wonderful/error.hpp"

namespace wonderful {

namespace {

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

}  // namespace

std::vector<Component> RankOneDatum::pattern(int n) const {
  if (orthogonal_pair) return {{'A', 1}, {'A', 1}};
  return {{family, n}};
}

std::vector<int> RankOneDatum::coefficients(int n) const {
  const std::string& l = label;
  if (l == "a′(1)") return {2};
  if (l == "aa(1,1)" || l == "g∗(2)") return {1, 1};
  if (l == "d(3)") return {1, 2, 1};
  if (l == "b′(n)") return std::vector<int>(n, 2);
  if (l == "b∗∗(3)") return {1, 2, 3};
  if (l == "c(n)" || l == "c∗(n)") {
    std::vector<int> c(n, 2);
    c.front() = 1;
    c.back() = 1;
    return c;
  }
  if (l == "d(n)") {
    std::vector<int> c(n, 2);
    c[n - 2] = 1;
    c[n - 1] = 1;
    return c;
  }
  if (l == "f(4)") return {1, 2, 3, 2};
  if (l == "g(2)") return {2, 1};
  if (l == "g′(2)") return {4, 2};
  return std::vector<int>(n, 1);  // a(n), b(n), b∗(n)
}

std::vector<int> RankOneDatum::sp_positions(int n) const {
  const std::string& l = label;
  if (l == "a(n)" || l == "b∗(n)") return range(2, n - 1);
  if (l == "d(3)") return {1, 3};
  if (l == "b(n)" || l == "b′(n)" || l == "d(n)") return range(2, n);
  if (l == "b∗∗(3)") return {1, 2};
  if (l == "c(n)") {
    std::vector<int> s{1};
    for (int i = 3; i <= n; ++i) s.push_back(i);
    return s;
  }
  if (l == "c∗(n)") return range(3, n);
  if (l == "f(4)") return {1, 2, 3};
  if (l == "g(2)" || l == "g′(2)") return {2};
  return {};  // a′(1), aa(1,1), g∗(2)
}

std::string RankOneDatum::instance_label(int n) const {
  const auto pos = label.find("(n)");
  if (pos == std::string::npos) return label;
  return label.substr(0, pos) + "(" + std::to_string(n) + ")";
}

const std::vector<RankOneDatum>& rank_one_table() {
  static const std::vector<RankOneDatum> table = {
      {"a(n)", 'A', 2, 0, false},     {"a′(1)", 'A', 1, 1, false},  {"aa(1,1)", 'A', 1, 1, true},
      {"d(3)", 'A', 3, 3, false},     {"b(n)", 'B', 2, 0, false},   {"b′(n)", 'B', 2, 0, false},
      {"b∗(n)", 'B', 2, 0, false},    {"b∗∗(3)", 'B', 3, 3, false}, {"c(n)", 'C', 3, 0, false},
      {"c∗(n)", 'C', 3, 0, false},    {"d(n)", 'D', 4, 0, false},   {"f(4)", 'F', 4, 4, false},
      {"g(2)", 'G', 2, 2, false},     {"g′(2)", 'G', 2, 2, false},  {"g∗(2)", 'G', 2, 2, false},
  };
  return table;
}

const std::vector<std::pair<std::string, std::string>>& rank_one_aliases() {
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"d(2)", "aa(1,1)"}, {"b′(1)", "a′(1)"}, {"c∗(2)", "b∗(2)"}};
  return aliases;
}

std::string normalize_label(std::string_view label) {
  std::string out;
  for (char ch : label) {
    if (ch == '*') out += "∗";
    else if (ch == '\'') out += "′";
    else if (ch != ' ') out += ch;
  }
  return out;
}

const RankOneDatum& rank_one_row(std::string_view label) {
  const std::string key = normalize_label(label);
  for (const RankOneDatum& row : rank_one_table())
    if (row.label == key) return row;
  throw ParameterError("unknown rank-1 label '" + std::string(label) + "'");
}

RankOneInstance rank_one_instance(std::string_view label) {
  std::string key = normalize_label(label);
  for (const auto& [alias, target] : rank_one_aliases())
    if (key == alias) key = target;
  for (const RankOneDatum& row : rank_one_table()) {
    if (row.label == key) return {&row, row.min_rank};
    const auto pos = row.label.find("(n)");
    if (pos == std::string::npos) continue;
    const std::string stem = row.label.substr(0, pos) + "(";
    if (key.size() > stem.size() + 1 && key.compare(0, stem.size(), stem) == 0 && key.back() == ')') {
      const std::string digits = key.substr(stem.size(), key.size() - stem.size() - 1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) continue;
      const int n = std::stoi(digits);
      if (!row.admits(n))
        throw ParameterError("rank " + std::to_string(n) + " not admissible for " + row.label);
      return {&row, n};
    }
  }
  throw ParameterError("unknown rank-1 label '" + std::string(label) + "'");
}

namespace {

Eigen::MatrixXi pattern_cartan(const std::vector<Component>& pattern) {
  int n = 0;
  for (const Component& c : pattern) n += c.rank;
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  int off = 0;
  for (const Component& c : pattern) {
    a.block(off, off, c.rank, c.rank) = cartan_matrix(c);
    off += c.rank;
  }
  return a;
}

using MatchKey = std::tuple<std::vector<int>, std::uint64_t, std::string>;

MatchKey key_of(const RankOneMatch& m) {
  return {std::vector<int>(m.weight.data(), m.weight.data() + m.weight.size()), m.trace.bits(), m.label};
}

/// Embeds every admissible row of pattern size `size` (all sizes when 0) into the
/// principal submatrix of d on `nodes`.
void collect(const DynkinDiagram& d, NodeSet nodes, int size, std::set<MatchKey>& seen,
             std::vector<RankOneMatch>& out) {
  const std::vector<int> members = nodes.elements();
  const int m = static_cast<int>(members.size());
  Eigen::MatrixXi target(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) target(r, c) = d.cartan()(members[r], members[c]);
  for (const RankOneDatum& row : rank_one_table()) {
    const int top = row.max_rank == 0 ? m : std::min(row.max_rank, m);
    for (int n = row.min_rank; n <= top; ++n) {
      const int psize = row.orthogonal_pair ? 2 : n;
      if (psize > m || (size != 0 && psize != size)) continue;
      const std::vector<int> coeffs = row.coefficients(n);
      const std::vector<int> sp = row.sp_positions(n);
      for (const Permutation& emb : induced_embeddings(pattern_cartan(row.pattern(n)), target)) {
        RankOneMatch match{d.zero_weight(), NodeSet{}, row.instance_label(n)};
        for (int k = 0; k < psize; ++k) match.weight[members[emb[k]]] = coeffs[k];
        for (int pos : sp) match.trace.insert(members[emb[pos - 1]]);
        if (seen.insert(key_of(match)).second) out.push_back(std::move(match));
      }
    }
  }
}

}  // namespace

std::vector<RankOneMatch> candidate_spherical_roots(const DynkinDiagram& d) {
  std::set<MatchKey> seen;
  std::vector<RankOneMatch> out;
  collect(d, d.all_nodes(), 0, seen, out);
  std::sort(out.begin(), out.end(), [](const RankOneMatch& a, const RankOneMatch& b) { return key_of(a) < key_of(b); });
  return out;
}

std::vector<RankOneMatch> rank_one_matches(const DynkinDiagram& d, const Weight& gamma) {
  std::set<MatchKey> seen;
  std::vector<RankOneMatch> all;
  if (gamma.size() != d.rank() || (gamma.array() < 0).any()) return all;
  const NodeSet supp = support(gamma);
  if (supp.empty()) return all;
  collect(d, supp, supp.size(), seen, all);
  std::vector<RankOneMatch> out;
  for (RankOneMatch& m : all)
    if (m.weight == gamma) out.push_back(std::move(m));
  return out;
}

namespace {

bool outside_support_orthogonal(const Weight& gamma, NodeSet sp, const DynkinDiagram& d) {
  bool ok = true;
  (sp - support(gamma)).for_each([&](int a) { ok = ok && d.pairing(a, gamma) == 0; });
  return ok;
}

}  // namespace

std::optional<std::string> rank_one_label(const Weight& gamma, NodeSet sp, const DynkinDiagram& d) {
  const NodeSet trace = sp & support(gamma);
  for (const RankOneMatch& m : rank_one_matches(d, gamma))
    if (m.trace == trace) return m.label;
  return std::nullopt;
}

bool axiom_S_holds(const Weight& gamma, NodeSet sp, const DynkinDiagram& d) {
  return rank_one_label(gamma, sp, d).has_value() && outside_support_orthogonal(gamma, sp, d);
}

bool axiom_R_violated(const Weight& gamma, NodeSet sp, const DynkinDiagram& d) {
  return axiom_S_holds(Weight(2 * gamma), sp, d);
}

}  // namespace wonderful

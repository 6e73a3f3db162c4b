#include "braidwire/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "braidwire/boundary.hpp"
#include "braidwire/error.hpp"

namespace braidwire {

IncidenceMatrix incidence(const Arrangement& a) {
  const WiringDiagram& d = a.diagram;
  require_valid(d);
  IncidenceMatrix m;
  m.rows = component_names(d);
  for (const auto& [comp, count] : a.free_points) {
    if (count < 0) throw Error("negative free point count for " + comp);
    if (std::find(m.rows.begin(), m.rows.end(), comp) == m.rows.end())
      throw Error("free points on unknown component " + comp);
  }
  std::map<std::string, std::size_t> row_of;
  for (std::size_t r = 0; r < m.rows.size(); ++r) row_of[m.rows[r]] = r;

  std::vector<std::vector<int>> cols;
  std::vector<int> perm(d.strands);
  std::iota(perm.begin(), perm.end(), 1);
  std::size_t at = 0;
  for (const auto& top : d.elements)
    for (const auto& e : expand_element(top)) {
      if (e.type == ElementType::I) {
        std::vector<int> col(m.rows.size(), 0);
        for (int p = e.a; p <= e.b; ++p) ++col[row_of.at(d.chart[perm[p - 1] - 1])];
        cols.push_back(std::move(col));
        m.columns.push_back(e.to_string() + "@" + std::to_string(at));
      }
      apply_permutation(e, perm);
      ++at;
    }
  m.intersection_columns = cols.size();
  for (const auto& name : m.rows) {
    auto it = a.free_points.find(name);
    for (int c = 0; it != a.free_points.end() && c < it->second; ++c) {
      std::vector<int> col(m.rows.size(), 0);
      col[row_of.at(name)] = 1;
      cols.push_back(std::move(col));
      m.columns.push_back("free:" + name);
    }
  }
  m.entries.assign(m.rows.size(), std::vector<int>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t r = 0; r < m.rows.size(); ++r) m.entries[r][j] = cols[j][r];
  return m;
}

std::map<std::string, int> weights(const Arrangement& a) {
  auto m = incidence(a);
  std::map<std::string, int> w;
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    w[m.rows[r]] = std::accumulate(m.entries[r].begin(), m.entries[r].end(), 0);
  return w;
}

std::size_t point_count(const Arrangement& a) { return incidence(a).columns.size(); }

namespace {

HomologyReport report_for(const IncidenceMatrix& m) {
  HomologyReport r;
  r.points = m.columns.size();
  r.disks = m.rows.size();
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    r.weights[m.rows[i]] = std::accumulate(m.entries[i].begin(), m.entries[i].end(), 0);
  IntMatrix im(m.rows.size(), std::vector<mpz_class>(m.columns.size()));
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.columns.size(); ++j) im[i][j] = m.entries[i][j];
  SmithForm s = smith_normal_form(im);
  r.rank = s.rank;
  r.b2 = r.points - r.rank;
  r.h1_free_rank = r.disks - r.rank;
  for (const auto& dk : s.diagonal())
    if (dk > 1) r.h1_torsion.push_back(dk);
  return r;
}

nlohmann::json big(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

}  // namespace

HomologyReport homology(const Arrangement& a) { return report_for(incidence(a)); }

QhdVerdict qhd_check(const Arrangement& a, const GermData& g) {
  auto m = incidence(a);
  std::vector<std::string> have = m.rows;
  std::vector<std::string> want = g.components();
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  if (have != want) {
    std::ostringstream os;
    os << "component names do not match the germ (expected";
    for (const auto& w : want) os << ' ' << w;
    os << ", got";
    for (const auto& h : have) os << ' ' << h;
    os << ')';
    throw Error(os.str());
  }

  QhdVerdict v;
  v.report = report_for(m);
  const auto& r = v.report;
  if (r.points != r.disks)
    v.reasons.push_back("#points " + std::to_string(r.points) + " != #disks " + std::to_string(r.disks));
  bool weights_ok = true;
  for (const auto& c : want) {
    const int got = r.weights.at(c);
    if (got != g.weight(c)) {
      weights_ok = false;
      v.reasons.push_back("weight mismatch on " + c + ": " + std::to_string(got) + " != " +
                          std::to_string(g.weight(c)));
    }
  }
  auto lm = linking_matrix(boundary_braid(a.diagram), right_chart(a.diagram));
  for (std::size_t i = 0; i < want.size(); ++i)
    for (std::size_t j = i + 1; j < want.size(); ++j) {
      const auto got = lm.lk(want[i], want[j]);
      const int exp = g.pairwise(want[i], want[j]);
      if (got != exp)
        v.reasons.push_back("linking mismatch on " + want[i] + "," + want[j] + ": " +
                            std::to_string(got) + " != " + std::to_string(exp));
    }
  if (weights_ok && r.rank != r.disks)
    throw Error("incidence map of a germ-weight-matching arrangement has rank " +
                std::to_string(r.rank) + " < " + std::to_string(r.disks) + " disks");
  if (r.b2 != 0) v.reasons.push_back("b2 = " + std::to_string(r.b2) + " != 0");
  v.qhd = v.reasons.empty();
  return v;
}

nlohmann::json incidence_to_json(const IncidenceMatrix& m) {
  return {{"rows", m.rows},
          {"columns", m.columns},
          {"intersection_columns", m.intersection_columns},
          {"entries", m.entries}};
}

nlohmann::json homology_to_json(const HomologyReport& r) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& t : r.h1_torsion) torsion.push_back(big(t));
  return {{"b1", r.b1},
          {"b1_note", "by hypothesis (rational singularity)"},
          {"b2", r.b2},
          {"torsion", torsion},
          {"h1_free_rank", r.h1_free_rank},
          {"points", r.points},
          {"disks", r.disks},
          {"rank", r.rank},
          {"weights", r.weights}};
}

nlohmann::json verdict_to_json(const QhdVerdict& v) {
  auto j = homology_to_json(v.report);
  j["verdict"] = v.qhd;
  j["reasons"] = v.reasons;
  return j;
}

}  // namespace braidwire

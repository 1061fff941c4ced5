#include "arrstab/report.hpp"

#include <algorithm>
#include <sstream>

namespace arrstab {

namespace {

void write_matrix(std::ostringstream& os, const IntMatrix& m) {
  std::size_t width = 1;
  for (const auto& x : m.data()) width = std::max(width, x.get_str().size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << ' ';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto s = m(r, c).get_str();
      os << ' ' << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
}


std::string grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      if (c == 0)
        os << row[c] << std::string(width[c] - row[c].size(), ' ');
      else
        os << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

nlohmann::ordered_json envelope(std::optional<Family> family, std::optional<GroundSpace> space,
                                nlohmann::ordered_json config, nlohmann::ordered_json result) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  nlohmann::ordered_json pc;
  pc["family"] = family ? nlohmann::ordered_json(to_string(*family)) : nlohmann::ordered_json(nullptr);
  pc["space"] = space ? nlohmann::ordered_json(to_string(space->kind)) : nlohmann::ordered_json(nullptr);
  j["paper_case"] = std::move(pc);
  j["config"] = std::move(config);
  j["result"] = std::move(result);
  return j;
}

std::string to_table(const Cohomology& h) {
  const GroupKind g = group_of(h.family);
  std::ostringstream os;
  os << "H^" << h.i << " " << to_string(h.family) << ' ' << to_string(h.space.kind) << " n=" << h.n << '\n';
  os << "dim  " << h.dim.get_str() << '\n';
  os << "decomposition  " << decomposition_string(g, h.decomposition) << '\n';
  os << "stable names";
  for (const auto& [irrep, mult] : h.decomposition)
    os << "  " << (mult == 1 ? "" : mult.get_str() + "*") << "V" << stable_name(irrep).name(g);
  os << '\n';
  return os.str();
}

std::string to_table(const E2Cell& cell) {
  const GroupKind g = group_of(cell.family);
  std::ostringstream os;
  os << "E2^{" << cell.p << ',' << cell.q << "} " << to_string(cell.family) << ' ' << to_string(cell.space.kind)
     << " n=" << cell.n << '\n';
  os << "dim  " << cell.dim.get_str() << '\n';
  os << "decomposition  " << decomposition_string(g, cell.decomposition) << '\n';
  os << "pieces (" << cell.pieces.size() << ", sum " << (cell.pieces_match ? "matches" : "DIFFERS") << ")\n";
  for (const auto& piece : cell.pieces)
    os << "  lambda=" << piece.lambda.to_string() << " r=" << piece.r << " alpha=" << partition_string(piece.alpha)
       << " k=" << piece.k << " |H|=" << piece.subgroup_order << " dim=" << piece.induced.degree().get_str() << '\n';
  return os.str();
}

std::string to_table(const StabilityReport& r) {
  const GroupKind g = r.group();
  std::ostringstream os;
  os << "H^" << r.i << ' ' << to_string(r.family) << ' ' << to_string(r.space.kind) << " n=" << r.n_lo << ".." << r.n_hi
     << '\n';
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"n"}, dims{"dim"}, trivial{"trivial"};
  for (int n = r.n_lo; n <= r.n_hi; ++n) head.push_back(std::to_string(n));
  for (const auto& d : r.dims) dims.push_back(d.get_str());
  rows.push_back(head);
  rows.push_back(dims);
  for (const auto& [name, seq] : r.multiplicities) {
    std::vector<std::string> row{"V" + name.name(g)};
    for (const auto& m : seq) row.push_back(m.get_str());
    rows.push_back(row);
  }
  for (const auto& m : r.trivial_multiplicities) trivial.push_back(m.get_str());
  rows.push_back(trivial);
  os << grid(rows);
  os << r.summary() << '\n';
  if (r.certified && !r.polynomial_determined)
    os << "dimension polynomial undetermined: " << r.fit_points << " stable points, need " << 2 * r.i + 2 << '\n';
  if (r.polynomial_determined) {
    os << "dimension polynomial (degree " << r.polynomial_degree << "):";
    for (std::size_t d = r.dimension_polynomial.size(); d-- > 0;) {
      if (r.dimension_polynomial[d] == 0) continue;
      os << ' ' << (r.dimension_polynomial[d] > 0 ? "+" : "") << r.dimension_polynomial[d].get_str();
      if (d) os << "*n" << (d > 1 ? "^" + std::to_string(d) : "");
    }
    os << '\n';
  }
  return os.str();
}

std::string to_table(const CharacterTable& t) {
  std::ostringstream os;
  os << "# " << to_string(t.group) << t.n << ", order " << t.order.get_str() << '\n';
  std::vector<std::string> head{""};
  for (const auto& c : t.classes) head.push_back(class_key(t.group, c));
  std::vector<std::vector<std::string>> rows{head};
  std::vector<std::string> sizes{"size"};
  for (const auto& s : t.class_sizes) sizes.push_back(s.get_str());
  rows.push_back(sizes);
  for (std::size_t i = 0; i < t.irreps.size(); ++i) {
    std::vector<std::string> row{t.irreps[i].name(t.group)};
    for (const auto& v : t.values[i]) row.push_back(v.get_str());
    rows.push_back(row);
  }
  os << grid(rows);
  return os.str();
}

std::string to_table(const IsomorphismReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  elements " << r.elements << "  covers " << r.covers << "  ranks";
  for (auto c : r.rank_counts) os << ' ' << c;
  os << '\n';
  if (!r.passed) os << "witness: " << r.witness << '\n';
  return os.str();
}

std::string to_table(const SmithNormalForm& snf) {
  std::ostringstream os;
  os << "rank " << snf.rank << "  invariant factors";
  for (const auto& d : snf.invariant_factors) os << ' ' << d.get_str();
  os << "\nD\n";
  write_matrix(os, snf.D);
  os << "U\n";
  write_matrix(os, snf.U);
  os << "V\n";
  write_matrix(os, snf.V);
  return os.str();
}

}  // namespace arrstab

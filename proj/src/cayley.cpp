#include "tropcay/cayley.hpp"

#include <algorithm>

#include "tropcay/errors.hpp"

namespace tropcay {

std::size_t CayleyConfig::embedded_index(std::size_t part, std::size_t index) const {
  for (std::size_t j = 0; j < origin.size(); ++j) {
    if (origin[j] == std::make_pair(part, index)) return j;
  }
  throw PreconditionError("no embedded point for part " + std::to_string(part) + " index " + std::to_string(index));
}

namespace {

void check_parts(const std::vector<PointConfiguration>& parts) {
  if (parts.empty()) throw PreconditionError("need at least one part");
  const std::size_t d = parts.front().ambient_dim();
  for (const auto& p : parts) {
    if (p.ambient_dim() != d) throw DimensionError("parts live in different ambient dimensions");
  }
}

}  // namespace

CayleyConfig cayley_embed(const std::vector<PointConfiguration>& parts) {
  check_parts(parts);
  const std::size_t d = parts.front().ambient_dim();
  const std::size_t n = parts.size();
  std::vector<std::string> labels;
  std::vector<RationalVector> coords;
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < parts[k].size(); ++j) {
      RationalVector c = parts[k].coords(j);
      c.resize(d + n, 0);
      c[d + k] = 1;
      coords.push_back(std::move(c));
      labels.push_back(std::to_string(k + 1) + ":" + parts[k].label(j));
      origin.emplace_back(k, j);
    }
  }
  return {parts, PointConfiguration(d + n, std::move(labels), std::move(coords)), std::move(origin)};
}

MixedSubdivision cayley_to_mixed(const CayleyConfig& cayley, const Subdivision& subdivision) {
  if (subdivision.config.size() != cayley.embedded.size()) {
    throw PreconditionError("subdivision is not of this Cayley embedding");
  }
  MixedSubdivision ms{cayley.parts, {}};
  for (const auto& cell : subdivision.cells) {
    MixedCell mc;
    mc.subsets.resize(cayley.parts.size());
    for (auto j : cell) {
      const auto [part, index] = cayley.origin[j];
      mc.subsets[part].push_back(index);
    }
    for (std::size_t k = 0; k < mc.subsets.size(); ++k) {
      if (mc.subsets[k].empty()) {
        throw NonTransversalCellError("Cayley cell " + to_string(cell, cayley.embedded) + " misses part " +
                                      std::to_string(k + 1));
      }
      std::sort(mc.subsets[k].begin(), mc.subsets[k].end());
    }
    ms.cells.push_back(std::move(mc));
  }
  std::sort(ms.cells.begin(), ms.cells.end());
  return ms;
}

Subdivision mixed_to_cayley(const CayleyConfig& cayley, const MixedSubdivision& ms) {
  if (ms.parts.size() != cayley.parts.size()) throw PreconditionError("mixed subdivision has the wrong part count");
  std::vector<Cell> cells;
  for (const auto& mc : ms.cells) {
    if (mc.subsets.size() != cayley.parts.size()) throw PreconditionError("mixed cell has the wrong part count");
    Cell cell;
    for (std::size_t k = 0; k < mc.subsets.size(); ++k) {
      if (mc.subsets[k].empty()) throw PreconditionError("mixed cell with an empty label subset");
      for (auto index : mc.subsets[k]) {
        if (index >= cayley.parts[k].size()) throw PreconditionError("mixed cell label out of range");
        cell.push_back(cayley.embedded_index(k, index));
      }
    }
    std::sort(cell.begin(), cell.end());
    if (std::adjacent_find(cell.begin(), cell.end()) != cell.end()) {
      throw PreconditionError("mixed cell repeats a label");
    }
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end());
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (a != b && std::includes(cells[b].begin(), cells[b].end(), cells[a].begin(), cells[a].end())) {
        throw PreconditionError("incompatible mixed cells: one label set contains another");
      }
    }
  }
  Subdivision s{cayley.embedded, {}, Side::Below, std::move(cells), {}, {}};
  std::vector<bool> used(cayley.embedded.size(), false);
  for (const auto& c : s.cells)
    for (auto j : c) used[j] = true;
  for (std::size_t j = 0; j < used.size(); ++j) {
    if (!used[j]) s.non_face_points.push_back(j);
  }
  return s;
}

PointConfiguration minkowski_config(const std::vector<PointConfiguration>& parts) {
  check_parts(parts);
  const std::size_t d = parts.front().ambient_dim();
  std::vector<std::string> labels;
  std::vector<RationalVector> coords;
  std::vector<std::size_t> idx(parts.size(), 0);
  for (;;) {
    RationalVector sum(d, 0);
    std::string label = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const auto& p = parts[k].coords(idx[k]);
      for (std::size_t i = 0; i < d; ++i) sum[i] += p[i];
      if (k) label += ",";
      label += parts[k].label(idx[k]);
    }
    labels.push_back(label + ")");
    coords.push_back(std::move(sum));
    std::size_t k = 0;
    while (k < parts.size() && ++idx[k] == parts[k].size()) idx[k++] = 0;
    if (k == parts.size()) break;
  }
  return PointConfiguration(d, std::move(labels), std::move(coords));
}

MixedSubdivision mixed_regular(const std::vector<PointConfiguration>& parts, const std::vector<Lifting>& liftings) {
  if (liftings.size() != parts.size()) throw DimensionError("need one lifting per part");
  const CayleyConfig cayley = cayley_embed(parts);
  Lifting joint;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (liftings[k].size() != parts[k].size()) throw DimensionError("lifting size does not match its part");
    joint.insert(joint.end(), liftings[k].begin(), liftings[k].end());
  }
  return cayley_to_mixed(cayley, regular_subdivision(cayley.embedded, joint, Side::Below));
}

std::set<RationalVector> mixed_cell_points(const std::vector<PointConfiguration>& parts, const MixedCell& cell) {
  const std::size_t d = parts.front().ambient_dim();
  std::set<RationalVector> sums{RationalVector(d, 0)};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::set<RationalVector> next;
    for (const auto& s : sums) {
      for (auto j : cell.subsets[k]) {
        RationalVector t = s;
        for (std::size_t i = 0; i < d; ++i) t[i] += parts[k].coords(j)[i];
        next.insert(std::move(t));
      }
    }
    sums = std::move(next);
  }
  return sums;
}

TropPolynomial part_polynomial(const PointConfiguration& part, const Lifting& lifting) {
  if (lifting.size() != part.size()) throw DimensionError("lifting size does not match its part");
  std::vector<std::pair<ExponentVector, TropNum>> terms;
  for (std::size_t j = 0; j < part.size(); ++j) {
    ExponentVector e;
    for (const auto& c : part.coords(j)) {
      if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
        throw PreconditionError("part point " + part.label(j) + " is not a lattice point");
      }
      e.push_back(c.get_num().get_si());
    }
    terms.emplace_back(std::move(e), TropNum(lifting[j]));
  }
  return TropPolynomial::make(terms, Orientation::Min, part.ambient_dim());
}

RationalVector two_sided_coordinates(const CayleyConfig& cayley, std::size_t embedded_index) {
  if (cayley.parts.size() != 2) throw PreconditionError("two_sided_coordinates needs exactly two parts");
  const std::size_t d = cayley.parts.front().ambient_dim();
  const auto& p = cayley.embedded.coords(embedded_index);
  RationalVector out(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(d));
  out.push_back(p[d + 1] - p[d]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> product_of_simplices_vertices(const CayleyConfig& cayley) {
  const std::size_t d = cayley.parts.front().ambient_dim();
  const std::size_t n = cayley.parts.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t j = 0; j < cayley.embedded.size(); ++j) {
    const auto& p = cayley.embedded.coords(j);
    std::vector<std::size_t> ones;
    for (std::size_t c = 0; c < d + n; ++c) {
      if (p[c] == 1) {
        ones.push_back(c);
      } else if (p[c] != 0) {
        return {};
      }
    }
    if (ones.size() != 2 || ones[0] >= d || ones[1] < d) return {};
    out.emplace_back(ones[0], ones[1] - d);
    seen.insert(out.back());
  }
  if (seen.size() != d * n || out.size() != d * n) return {};
  return out;
}

bool refines(const std::vector<Cell>& fine, const std::vector<Cell>& coarse) {
  return std::all_of(fine.begin(), fine.end(), [&](const Cell& f) {
    return std::any_of(coarse.begin(), coarse.end(),
                       [&](const Cell& c) { return std::includes(c.begin(), c.end(), f.begin(), f.end()); });
  });
}

bool refines(const MixedSubdivision& fine, const MixedSubdivision& coarse) {
  return std::all_of(fine.cells.begin(), fine.cells.end(), [&](const MixedCell& f) {
    return std::any_of(coarse.cells.begin(), coarse.cells.end(), [&](const MixedCell& c) {
      for (std::size_t k = 0; k < f.subsets.size(); ++k) {
        if (!std::includes(c.subsets[k].begin(), c.subsets[k].end(), f.subsets[k].begin(), f.subsets[k].end())) {
          return false;
        }
      }
      return true;
    });
  });
}

}  // namespace tropcay

#include <algorithm>
#include <stdexcept>

#include "godbersen/errors.hpp"
#include "godbersen/linalg.hpp"
#include "godbersen/polytope.hpp"

namespace godbersen {

SectionProfile::SectionProfile(Vector direction, std::vector<Rat> breakpoints,
                               std::vector<Polynomial> pieces)
    : direction_(std::move(direction)), breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size()) {
    throw std::invalid_argument("SectionProfile: need one piece per breakpoint interval");
  }
}

Rat SectionProfile::operator()(const Rat& t) const {
  if (t < lower() || t > upper()) return Rat(0);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (t <= breakpoints_[i + 1]) return pieces_[i](t);
  }
  return pieces_.back()(t);
}

Rat SectionProfile::integral() const { return moment(0); }

Rat SectionProfile::moment(unsigned k) const {
  const Polynomial weight = Polynomial::linear_power(Rat(0), k);
  Rat total(0);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    total += (weight * pieces_[i]).integrate(breakpoints_[i], breakpoints_[i + 1]);
  }
  return total;
}

namespace {

Rat binomial(unsigned n, unsigned k) {
  Rat r(1);
  for (unsigned i = 1; i <= k; ++i) r = r * Rat(static_cast<long>(n - k + i)) / Rat(static_cast<long>(i));
  return r;
}

// Section density of one n-simplex with sorted vertex heights, valid on an
// open interval whose left end is `below_level`.
//
// The cumulative volume below t equals (-1)^n Vol * [h_0..h_n] (t - x)_+^n,
// a divided difference in x. Differentiating in t gives the density
// (-1)^n n Vol [h_0..h_n] (t - x)_+^{n-1}. Near each node the truncated
// power is either (t - x)^{n-1} (node at or below the interval) or 0, so
// repeated nodes are handled with the confluent (Hermite) rule.
Polynomial simplex_density(const std::vector<Rat>& heights, const Rat& vol, const Rat& below_level) {
  const std::size_t n = heights.size() - 1;
  const unsigned p = static_cast<unsigned>(n - 1);
  std::vector<std::vector<Polynomial>> dd(n + 1, std::vector<Polynomial>(n + 1));
  for (std::size_t len = 0; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len;
      if (heights[i] == heights[j]) {
        const unsigned order = static_cast<unsigned>(len);
        if (heights[i] <= below_level && order <= p) {
          Polynomial term = Polynomial::linear_power(heights[i], p - order) * binomial(p, order);
          if (order % 2 == 1) term *= Rat(-1);
          dd[i][j] = std::move(term);
        }
      } else {
        dd[i][j] = (dd[i + 1][j] - dd[i][j - 1]) * (Rat(1) / (heights[j] - heights[i]));
      }
    }
  }
  Rat factor = vol * Rat(static_cast<long>(n));
  if (n % 2 == 1) factor = -factor;
  return dd[0][n] * factor;
}

}  // namespace

SectionProfile section_profile(const Polytope& k, const Vector& w) {
  if (w.size() != k.dim()) throw DimensionMismatch("section_profile: direction has wrong length");
  if (is_zero(w)) throw ZeroDirection("section_profile: zero direction");
  const std::size_t n = k.dim();

  struct Cell {
    std::vector<Rat> heights;
    Rat vol;
  };
  Rat n_factorial(1);
  for (std::size_t i = 2; i <= n; ++i) n_factorial *= Rat(static_cast<long>(i));

  const Point& apex = k.interior_point();
  const Rat apex_height = dot(apex, w);
  std::vector<Cell> cells;
  std::vector<Rat> grid{apex_height};
  for (const auto& corners : k.boundary_simplices()) {
    Cell cell;
    cell.heights.push_back(apex_height);
    Matrix m;
    for (const auto& c : corners) {
      m.push_back(c - apex);
      cell.heights.push_back(dot(c, w));
      grid.push_back(cell.heights.back());
    }
    cell.vol = abs(linalg::determinant(std::move(m))) / n_factorial;
    std::sort(cell.heights.begin(), cell.heights.end());
    cells.push_back(std::move(cell));
  }
  std::vector<Rat> levels;
  for (const auto& v : k.vertices()) levels.push_back(dot(v, w));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<Polynomial> fine;
  for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
    Polynomial piece;
    for (const auto& cell : cells) {
      if (cell.heights.back() <= grid[g] || cell.heights.front() >= grid[g + 1]) continue;
      piece += simplex_density(cell.heights, cell.vol, grid[g]);
    }
    fine.push_back(std::move(piece));
  }

  // Collapse grid levels that are not vertex levels; the summed density is
  // polynomial across them.
  std::vector<Polynomial> pieces;
  std::size_t g = 0;
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    while (grid[g] < levels[l]) ++g;
    Polynomial piece = fine[g];
    ++g;
    while (grid[g] < levels[l + 1]) {
      if (!(fine[g] == piece)) throw std::logic_error("section_profile: density not polynomial between vertex levels");
      ++g;
    }
    pieces.push_back(std::move(piece));
  }
  return SectionProfile(w, std::move(levels), std::move(pieces));
}

}  // namespace godbersen

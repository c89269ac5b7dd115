#include "riders/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "riders/errors.hpp"

namespace riders {

namespace {

using Wide = __int128;

Wide det(const Ray& a, const Ray& b) { return Wide(a.dx) * b.dy - Wide(a.dy) * b.dx; }

Ray as_ray(const Direction& d) { return {d.dx(), d.dy()}; }

int det_sign(const Ray& a, const Ray& b) {
  Wide v = det(a, b);
  return (v > 0) - (v < 0);
}

int det_sign(const Ray& a, const Point& v) { return sign(a.dx * v.y - a.dy * v.x); }
int det_sign(const Point& v, const Ray& a) { return -det_sign(a, v); }

std::string describe(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

}  // namespace

Direction::Direction(std::int64_t dx, std::int64_t dy) {
  if (dx == 0 && dy == 0) throw InvalidArgument("invalid direction: zero vector");
  std::int64_t g = std::gcd(dx, dy);
  dx /= g;
  dy /= g;
  if (dy < 0 || (dy == 0 && dx < 0)) {
    dx = -dx;
    dy = -dy;
  }
  dx_ = dx;
  dy_ = dy;
}

Direction normalize_direction(std::int64_t dx, std::int64_t dy) { return Direction(dx, dy); }

MoveSet::MoveSet(std::vector<Direction> directions) {
  if (directions.empty()) throw InvalidArgument("moveset needs at least one direction");
  for (std::size_t a = 0; a < directions.size(); ++a)
    for (std::size_t b = a + 1; b < directions.size(); ++b)
      if (det(as_ray(directions[a]), as_ray(directions[b])) == 0)
        throw InvalidArgument("moveset directions " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                              " are parallel");

  // Reference: vertical if present, else the largest angle in [0, 180).
  const Direction vertical(0, 1);
  auto ref_it = std::find(directions.begin(), directions.end(), vertical);
  if (ref_it == directions.end()) {
    ref_it = std::max_element(directions.begin(), directions.end(), [](const Direction& a, const Direction& b) {
      return det(as_ray(a), as_ray(b)) > 0;  // b has the larger angle
    });
  }
  const Ray ref = as_ray(*ref_it);

  // One ray per direction inside the clockwise half-turn [ref, -ref).
  std::vector<std::pair<Ray, Direction>> half;
  for (const Direction& d : directions) {
    Ray ray = as_ray(d);
    if (!(d == *ref_it) && det(ref, ray) > 0) ray = {-ray.dx, -ray.dy};
    half.emplace_back(ray, d);
  }
  std::sort(half.begin(), half.end(), [&](const auto& a, const auto& b) {
    if (a.first == ref) return !(b.first == ref);
    if (b.first == ref) return false;
    return det(a.first, b.first) < 0;  // b is clockwise of a
  });

  for (const auto& [ray, d] : half) {
    directions_.push_back(d);
    rays_.push_back(ray);
  }
  for (const auto& [ray, d] : half) rays_.push_back({-ray.dx, -ray.dy});

  const int sectors = static_cast<int>(rays_.size());
  for (int label = 1; label <= sectors; ++label) {
    Ray sample = sector_sample(label);
    SignPattern pattern;
    for (const Direction& d : directions_) pattern.push_back(static_cast<std::int8_t>(det_sign(as_ray(d), sample)));
    patterns_.push_back(std::move(pattern));
  }
}

Ray MoveSet::sector_sample(int label) const {
  const std::size_t n = rays_.size();
  const Ray& a = rays_[static_cast<std::size_t>(label - 1)];
  if (directions_.size() == 1) return {a.dy, -a.dx};  // clockwise perpendicular
  const Ray& b = rays_[static_cast<std::size_t>(label) % n];
  return {a.dx + b.dx, a.dy + b.dy};
}

int MoveSet::label_of_pattern(std::span<const std::int8_t> signs) const {
  for (std::size_t k = 0; k < patterns_.size(); ++k)
    if (std::equal(signs.begin(), signs.end(), patterns_[k].begin(), patterns_[k].end())) return static_cast<int>(k) + 1;
  return 0;
}

bool MoveSet::is_pattern_prefix(std::span<const std::int8_t> prefix) const {
  for (const SignPattern& p : patterns_)
    if (std::equal(prefix.begin(), prefix.end(), p.begin())) return true;
  return false;
}

std::string MoveSet::to_string() const {
  std::ostringstream out;
  for (std::size_t m = 0; m < directions_.size(); ++m) {
    if (m) out << ';';
    out << directions_[m].dx() << ',' << directions_[m].dy();
  }
  return out.str();
}

MoveSet queen_moveset() { return MoveSet({{0, 1}, {1, 1}, {1, 0}, {1, -1}}); }
MoveSet rook_moveset() { return MoveSet({{0, 1}, {1, 0}}); }

MoveSet parse_moveset(std::string_view text) {
  auto trim = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
  };
  if (text == "queen") return queen_moveset();
  if (text == "rook") return rook_moveset();

  std::vector<Direction> dirs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item = trim(std::string(text.substr(start, end - start)));
    std::size_t comma = item.find(',');
    if (comma == std::string::npos) throw InvalidArgument("moveset entry '" + item + "' is not 'dx,dy'");
    try {
      std::size_t used = 0;
      long long dx = std::stoll(item.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("trailing");
      std::string rest = item.substr(comma + 1);
      long long dy = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing");
      dirs.emplace_back(dx, dy);
    } catch (const InvalidArgument&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidArgument("moveset entry '" + item + "' is not 'dx,dy'");
    }
    start = end + 1;
  }
  return MoveSet(std::move(dirs));
}

MoveSet default_moveset(std::size_t r) {
  if (r == 0) throw InvalidArgument("moveset needs r >= 1");
  if (r == 2) return rook_moveset();
  std::vector<Direction> dirs{{0, 1}, {1, 1}, {1, 0}, {1, -1}};
  for (std::int64_t k = 2; dirs.size() < r; ++k) {
    dirs.emplace_back(1, k);
    dirs.emplace_back(k, 1);
    dirs.emplace_back(1, -k);
    dirs.emplace_back(k, -1);
  }
  dirs.resize(r, Direction(0, 1));
  return MoveSet(std::move(dirs));
}

int side_sign(const Point& base, const Direction& dir, const Point& other) {
  return det_sign(as_ray(dir), other - base);
}

bool is_attacking(const Point& a, const Point& b, const MoveSet& moves) {
  if (a == b) throw AttackingError("coincident riders at " + describe(a));
  for (const Direction& d : moves.directions())
    if (side_sign(a, d, b) == 0) return true;
  return false;
}

int region_of(const Point& observer, const Point& target, const MoveSet& moves) {
  const Point v = target - observer;
  if (v.x == 0 && v.y == 0) throw AttackingError("coincident riders at " + describe(observer));
  const auto& rays = moves.rays();
  if (moves.size() == 1) {
    int s = det_sign(rays[0], v);
    if (s == 0) throw AttackingError("target " + describe(target) + " is on a move line of " + describe(observer));
    return s < 0 ? 1 : 2;
  }
  const std::size_t n = rays.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (det_sign(rays[k], v) < 0 && det_sign(v, rays[(k + 1) % n]) < 0) return static_cast<int>(k) + 1;
  }
  throw AttackingError("target " + describe(target) + " is on a move line of " + describe(observer));
}

int antipodal_label(int label, std::size_t r) {
  const int rr = static_cast<int>(r);
  return ((label + rr - 1) % (2 * rr)) + 1;
}

void require_non_attacking(std::span<const Point> placement, const MoveSet& moves) {
  for (std::size_t i = 0; i < placement.size(); ++i)
    for (std::size_t j = i + 1; j < placement.size(); ++j) {
      if (placement[i] == placement[j])
        throw AttackingError("riders " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide at " +
                             describe(placement[i]));
      for (const Direction& d : moves.directions())
        if (side_sign(placement[i], d, placement[j]) == 0)
          throw AttackingError("riders " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                               " attack along direction (" + std::to_string(d.dx()) + "," + std::to_string(d.dy()) +
                               ")");
    }
}

}  // namespace riders

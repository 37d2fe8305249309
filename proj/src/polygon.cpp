#include "ptolemy_lab/polygon.hpp"

#include <string>

#include "ptolemy_lab/error.hpp"

namespace ptolemy_lab {

std::ostream& operator<<(std::ostream& os, const Arc& a) {
  return os << '{' << a.first() << ',' << a.second() << '}';
}

std::ostream& operator<<(std::ostream& os, const Diagonal& d) { return os << d.arc(); }

Polygon::Polygon(int size) : size_(size) {
  if (size < 4) {
    throw Error(ErrorCode::parse_error,
                "polygon size must be at least 4, got " + std::to_string(size));
  }
}

Vertex Polygon::normalize(long long v) const noexcept {
  const long long r = v % size_;
  return static_cast<Vertex>(r < 0 ? r + size_ : r);
}

Diagonal Polygon::diagonal(Vertex u, Vertex v) const {
  if (!is_diagonal(u, v)) {
    throw Error(ErrorCode::parse_error, "{" + std::to_string(u) + "," + std::to_string(v) +
                                            "} is not a diagonal of the " +
                                            std::to_string(size_) + "-gon");
  }
  return Diagonal(u, v);
}

Arc Polygon::arc(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v) || u == v) {
    throw Error(ErrorCode::parse_error, "{" + std::to_string(u) + "," + std::to_string(v) +
                                            "} is not an arc of the " +
                                            std::to_string(size_) + "-gon");
  }
  return Arc(u, v);
}

std::optional<Diagonal> Polygon::as_diagonal(const Arc& a) const noexcept {
  if (is_zero(a)) return std::nullopt;
  return Diagonal(a.first(), a.second());
}

bool Polygon::crosses(const Arc& d, const Arc& e) const noexcept {
  if (d.has_endpoint(e.first()) || d.has_endpoint(e.second())) return false;
  return in_open_interval(e.first(), d.first(), d.second()) !=
         in_open_interval(e.second(), d.first(), d.second());
}

Arc Polygon::suspend(const Arc& a) const noexcept {
  return Arc(step(a.first(), -1), step(a.second(), -1));
}

Arc Polygon::suspend_inverse(const Arc& a) const noexcept {
  return Arc(step(a.first(), 1), step(a.second(), 1));
}

Diagonal Polygon::suspend(const Diagonal& d) const noexcept {
  return Diagonal(step(d.first(), -1), step(d.second(), -1));
}

Diagonal Polygon::suspend_inverse(const Diagonal& d) const noexcept {
  return Diagonal(step(d.first(), 1), step(d.second(), 1));
}

std::vector<Diagonal> Polygon::all_diagonals() const {
  std::vector<Diagonal> out;
  out.reserve(diagonal_count());
  for (Vertex u = 0; u < size_; ++u) {
    for (Vertex v = u + 2; v < size_; ++v) {
      if (!adjacent(u, v)) out.push_back(Diagonal(u, v));
    }
  }
  return out;
}

}  // namespace ptolemy_lab

#include "grestrict/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "grestrict/errors.hpp"

namespace grestrict {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  for (std::size_t p = 0; p < degree; ++p) images_[p] = static_cast<Point>(p);
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point q : images_) {
    if (q >= images_.size() || seen[q]) {
      throw InputError("image list is not a bijection");
    }
    seen[q] = true;
  }
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    std::vector<bool> seen(degree, false);
    for (Point p : cycle) {
      if (p >= degree) throw InputError("cycle point out of range");
      if (seen[p]) throw InputError("point repeated within a cycle");
      seen[p] = true;
    }
    if (cycle.size() < 2) continue;
    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    result = result * c;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (images_[p] != p) return false;
  }
  return true;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (images_[p] != p) return static_cast<Point>(p);
  }
  return static_cast<Point>(images_.size());
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) {
    result.images_[images_[p]] = static_cast<Point>(p);
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& s) const {
  // s^-1 x s maps s(p) to s(x(p)).
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) {
    result.images_[s.images_[p]] = s.images_[images_[p]];
  }
  return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation result;
  result.images_.resize(a.images_.size());
  for (std::size_t p = 0; p < a.images_.size(); ++p) {
    result.images_[p] = b.images_[a.images_[p]];
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (seen[p] || images_[p] == p) continue;
    any = true;
    out << '(';
    Point q = static_cast<Point>(p);
    bool first = true;
    while (!seen[q]) {
      seen[q] = true;
      if (!first) out << ' ';
      out << q + 1;
      first = false;
      q = images_[q];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::string Permutation::to_image_string() const {
  std::ostringstream out;
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (p != 0) out << ' ';
    out << images_[p] + 1;
  }
  return out.str();
}

std::size_t Permutation::hash() const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point q : images_) {
    h ^= q;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t line, std::size_t column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }

  std::uint64_t number() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a point number");
    }
    std::uint64_t value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > 0xffffffffULL) fail("point number too large");
      advance();
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, offset_ + pos_ + 1);
  }
  std::size_t column() const { return offset_ + pos_ + 1; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree,
                              std::size_t line, std::size_t column_offset) {
  Scanner in(text, line, column_offset);
  in.skip_space();
  if (in.done()) in.fail("empty generator");

  auto point = [&](Scanner& s) {
    std::uint64_t value = s.number();
    if (value < 1 || value > degree) {
      s.fail("point " + std::to_string(value) + " outside 1.." +
             std::to_string(degree));
    }
    return static_cast<Point>(value - 1);
  };

  if (in.peek() == '(') {
    std::vector<std::vector<Point>> cycles;
    while (true) {
      in.skip_space();
      if (in.done()) break;
      if (in.peek() != '(') in.fail("expected '('");
      in.advance();
      std::vector<Point> cycle;
      std::vector<bool> seen(degree, false);
      while (true) {
        in.skip_space();
        if (in.done()) in.fail("unterminated cycle");
        if (in.peek() == ')') {
          in.advance();
          break;
        }
        if (in.peek() == ',') {
          in.advance();
          continue;
        }
        Point p = point(in);
        if (seen[p]) in.fail("point repeated within a cycle");
        seen[p] = true;
        cycle.push_back(p);
      }
      cycles.push_back(std::move(cycle));
    }
    return Permutation::from_cycles(degree, cycles);
  }

  std::vector<Point> images;
  std::vector<bool> seen(degree, false);
  while (true) {
    in.skip_space();
    if (in.done()) break;
    if (images.size() == degree) in.fail("too many images");
    Point p = point(in);
    if (seen[p]) in.fail("image repeated");
    seen[p] = true;
    images.push_back(p);
  }
  if (images.size() != degree) {
    in.fail("expected " + std::to_string(degree) + " images, got " +
            std::to_string(images.size()));
  }
  return Permutation(std::move(images));
}

}  // namespace grestrict

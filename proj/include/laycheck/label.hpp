#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace laycheck {

// A dynamic array of naturals that stays allocation-free for the short
// paths labels almost always are. Checks stay memory-bound otherwise: every
// fact carries two of these.
class SmallPath {
 public:
  SmallPath() = default;
  SmallPath(std::initializer_list<uint32_t> init) {
    for (uint32_t v : init) push_back(v);
  }
  SmallPath(const SmallPath& other) { assign(other.data(), other.size_); }
  SmallPath(SmallPath&& other) noexcept { steal(other); }
  SmallPath& operator=(const SmallPath& other) {
    if (this != &other) assign(other.data(), other.size_);
    return *this;
  }
  SmallPath& operator=(SmallPath&& other) noexcept {
    if (this != &other) {
      release();
      steal(other);
    }
    return *this;
  }
  ~SmallPath() { release(); }

  uint32_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  uint32_t* data() { return cap_ > kInline ? heap_ : inline_; }
  const uint32_t* data() const { return cap_ > kInline ? heap_ : inline_; }
  uint32_t* begin() { return data(); }
  uint32_t* end() { return data() + size_; }
  const uint32_t* begin() const { return data(); }
  const uint32_t* end() const { return data() + size_; }
  uint32_t& operator[](size_t i) { return data()[i]; }
  uint32_t operator[](size_t i) const { return data()[i]; }
  uint32_t& front() { return data()[0]; }
  uint32_t front() const { return data()[0]; }
  uint32_t& back() { return data()[size_ - 1]; }
  uint32_t back() const { return data()[size_ - 1]; }

  void push_back(uint32_t v) {
    if (size_ == cap_) grow();
    data()[size_++] = v;
  }
  void pop_back() { --size_; }

  bool operator==(const SmallPath& other) const {
    if (size_ != other.size_) return false;
    for (uint32_t i = 0; i < size_; ++i)
      if (data()[i] != other.data()[i]) return false;
    return true;
  }
  std::strong_ordering operator<=>(const SmallPath& other) const {
    uint32_t n = size_ < other.size_ ? size_ : other.size_;
    for (uint32_t i = 0; i < n; ++i)
      if (auto c = data()[i] <=> other.data()[i]; c != 0) return c;
    return size_ <=> other.size_;
  }

 private:
  static constexpr uint32_t kInline = 2;

  void assign(const uint32_t* src, uint32_t n) {
    if (n > cap_) {
      release();
      heap_ = new uint32_t[n];
      cap_ = n;
    }
    size_ = n;
    uint32_t* dst = data();
    for (uint32_t i = 0; i < n; ++i) dst[i] = src[i];
  }

  void steal(SmallPath& other) {
    if (other.cap_ > kInline) {
      heap_ = other.heap_;
      cap_ = other.cap_;
      size_ = other.size_;
      other.cap_ = kInline;
      other.size_ = 0;
    } else {
      cap_ = kInline;
      size_ = other.size_;
      for (uint32_t i = 0; i < size_; ++i) inline_[i] = other.inline_[i];
    }
  }

  void grow() {
    uint32_t new_cap = cap_ * 2;
    uint32_t* bigger = new uint32_t[new_cap];
    const uint32_t* src = data();
    for (uint32_t i = 0; i < size_; ++i) bigger[i] = src[i];
    release();
    heap_ = bigger;
    cap_ = new_cap;
  }

  void release() {
    if (cap_ > kInline) delete[] heap_;
    cap_ = kInline;
  }

  union {
    uint32_t inline_[kInline];
    uint32_t* heap_;
  };
  uint32_t size_ = 0;
  uint32_t cap_ = kInline;
};

// A label is a non-empty path of naturals identifying an item's position in a
// layout. The head component is the top-level position; every further
// component descends into a repetition body. Scope paths (possibly empty,
// the prefix of a label without its last component) reuse the same type.
struct Label {
  SmallPath path;

  Label() = default;
  explicit Label(const std::vector<uint32_t>& p) {
    for (uint32_t v : p) path.push_back(v);
  }
  Label(std::initializer_list<uint32_t> p) : path(p) {}

  size_t size() const { return path.size(); }
  bool empty() const { return path.empty(); }
  uint32_t head() const { return path.front(); }
  uint32_t last() const { return path.back(); }

  // The label of the enclosing scope (path without the last component).
  Label parent() const {
    Label p = *this;
    p.path.pop_back();
    return p;
  }

  Label child(uint32_t component) const {
    Label c = *this;
    c.path.push_back(component);
    return c;
  }

  // The sibling label with the last component replaced by `component`.
  Label sibling(uint32_t component) const {
    Label s = *this;
    s.path.back() = component;
    return s;
  }

  bool is_prefix_of(const Label& other) const {
    if (path.size() > other.path.size()) return false;
    for (size_t i = 0; i < path.size(); ++i)
      if (path[i] != other.path[i]) return false;
    return true;
  }

  auto operator<=>(const Label&) const = default;
};

// Renders a label as dot-separated components, e.g. "1.0".
inline std::string to_string(const Label& l) {
  std::string out;
  for (size_t i = 0; i < l.path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(l.path[i]);
  }
  return out;
}

struct LabelHash {
  size_t operator()(const Label& l) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (uint32_t c : l.path) h = h * 0x100000001b3ull ^ c;
    return h;
  }
};

}  // namespace laycheck

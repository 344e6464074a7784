#include "laycheck/dsl.hpp"

#include <cctype>
#include <cstdint>

namespace laycheck {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  LayoutTree parse() {
    LayoutTree tree;
    tree.items = items();
    skip_ws();
    if (pos_ < text_.size())
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'",
           "item or end of input");
    return tree;
  }

 private:
  std::vector<Item> items() {
    std::vector<Item> out;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c == 'f') {
        ++pos_;
        out.push_back(Item::fixed());
      } else if (c == 'v') {
        ++pos_;
        out.push_back(Item::var());
      } else if (c == 'c') {
        ++pos_;
        out.push_back(Item::constant());
      } else if (c == 'p') {
        out.push_back(pointer());
      } else if (c == '[') {
        ++pos_;
        std::vector<Item> body = items();
        expect(']');
        out.push_back(Item::repetition(std::move(body)));
      } else {
        break;  // ']' closing a repetition, or junk caught by the caller
      }
    }
    return out;
  }

  Item pointer() {
    ++pos_;  // 'p'
    expect('(');
    Label offset = path();
    skip_ws();
    expect(',');
    uint64_t span = nat();
    skip_ws();
    expect(')');
    return Item::pointer(std::move(offset), span);
  }

  Label path() {
    Label l;
    l.path.push_back(static_cast<uint32_t>(nat()));
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        l.path.push_back(static_cast<uint32_t>(nat()));
      } else {
        break;
      }
    }
    return l;
  }

  uint64_t nat() {
    skip_ws();
    size_t begin = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number", "digit");
    uint64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<uint64_t>(text_[pos_] - '0');
      if (value > UINT32_MAX)
        fail_at(begin, "number out of range", "value <= 2^32-1");
      ++pos_;
    }
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail("expected '" + std::string(1, c) + "'", std::string(1, c));
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message, const std::string& expected) {
    fail_at(pos_, message, expected);
  }

  [[noreturn]] void fail_at(size_t begin, const std::string& message,
                            const std::string& expected) {
    size_t end = begin < text_.size() ? begin + 1 : begin;
    throw ParseError(SourceSpan{begin, end}, message, expected);
  }

  const std::string& text_;
  size_t pos_ = 0;
};

void print_items(const std::vector<Item>& items, std::string& out) {
  for (const Item& it : items) {
    if (!out.empty()) out += ' ';
    switch (it.type) {
      case ItemType::Fixed: out += 'f'; break;
      case ItemType::Var: out += 'v'; break;
      case ItemType::Const: out += 'c'; break;
      case ItemType::Pointer:
        out += "p(" + to_string(it.offset) + "," + std::to_string(it.span) + ")";
        break;
      case ItemType::Repetition:
        out += '[';
        print_items(it.body, out);
        out += " ]";
        break;
    }
  }
}

}  // namespace

LayoutTree parse_dsl(const std::string& text) { return Parser(text).parse(); }

std::string print_dsl(const LayoutTree& tree) {
  std::string out;
  print_items(tree.items, out);
  return out;
}

}  // namespace laycheck

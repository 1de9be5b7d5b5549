#include <cctype>
#include <string>

#include "sublat/analysis.hpp"
#include "sublat/errors.hpp"

namespace sublat {

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("end of input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos_, expected, std::string(text_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("integer");
    }
    if (pos_ - digits > 9) {
      pos_ = start;
      fail("integer below 10^9");
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<std::int64_t> integers(std::size_t count) {
    std::vector<std::int64_t> values;
    expect('(');
    for (std::size_t i = 0; i < count; ++i) {
      if (i) expect(',');
      values.push_back(integer());
    }
    expect(')');
    return values;
  }

  GroupSpec parse_spec() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    GroupSpec spec;
    using K = GroupSpec::Kind;
    if (name == "C" || name == "D" || name == "S" || name == "A") {
      spec.kind = name == "C" ? K::C : name == "D" ? K::D : name == "S" ? K::S : K::A;
      spec.parameters = integers(1);
    } else if (name == "K4") {
      spec.kind = K::K4;
    } else if (name == "NM") {
      spec.kind = K::NM;
      spec.parameters = integers(3);
    } else if (name == "SL" || name == "PSL") {
      spec.kind = name == "SL" ? K::SL2 : K::PSL2;
      expect('(');
      skip_space();
      if (integer() != 2) {
        pos_ = start + name.size() + 1;
        fail("dimension 2");
      }
      expect(',');
      spec.parameters = {integer()};
      expect(')');
    } else if (name == "DP") {
      spec.kind = K::DP;
      expect('(');
      spec.operands.push_back(parse_spec());
      expect(',');
      spec.operands.push_back(parse_spec());
      expect(')');
    } else {
      pos_ = start;
      fail("one of C, D, S, A, K4, NM, SL, PSL, DP");
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_spec(std::string_view text) {
  GroupSpec spec = SpecParser(text).parse();
  spec.validate();
  return spec;
}

}  // namespace sublat

#include "orbitcat/literal.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "orbitcat/error.hpp"

namespace orbitcat
{

namespace
{

class LiteralParser
{
public:
  LiteralParser(DerivedModel const *model, std::string_view text)
    : model_(model), text_(text)
  {}

  DerivedObject object()
  {
    skip_space();
    DerivedObject x = term();
    x.shift += optional_shift();
    return x;
  }

  DimVector dims()
  {
    bool const paren = accept('(');
    DimVector d;
    do {
      skip_space();
      int v = integer();
      if (v < 0)
        fail("negative dimension");
      d.push_back(v);
      skip_space();
    } while (accept(','));
    if (paren)
      expect(')');
    return d;
  }

  bool accept(char c)
  {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view word)
  {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  bool at_end()
  {
    skip_space();
    return pos_ == text_.size();
  }

  [[noreturn]] void fail(std::string const &what) const
  {
    throw ParseError(what, 1, static_cast<int>(pos_) + 1);
  }

private:
  DerivedObject term()
  {
    skip_space();
    bool const is_tau = accept("tau");
    if (is_tau || accept("F")) {
      int power = 1;
      if (accept('^'))
        power = integer();
      expect('(');
      DerivedObject inner = object();
      expect(')');
      if (is_tau)
        return model_->label(model_->tau(model_->locate(inner), power));
      return model_->F(inner, power);
    }
    if (accept("dim=")) {
      DimVector d = dims();
      if (static_cast<int>(d.size()) != model_->rank())
        fail("dimension vector has the wrong length");
      auto id = model_->ar().find(d);
      if (!id)
        fail("not the dimension vector of an indecomposable");
      return {*id, 0};
    }
    skip_space();
    if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '_') {
      char const kind = text_[pos_];
      pos_ += 2;
      std::string name = vertex_name();
      auto v = model_->quiver().index_of(name);
      if (!v)
        fail("unknown vertex '" + name + "'");
      auto const &ar = model_->ar();
      switch (kind) {
      case 'P': return {ar.proj[*v], 0};
      case 'I': return {ar.inj[*v], 0};
      case 'S': return {ar.simple[*v], 0};
      default: break;
      }
    }
    fail("expected P_, I_, S_, dim=, F or tau");
  }

  int optional_shift()
  {
    if (!accept('['))
      return 0;
    skip_space();
    int s = integer();
    expect(']');
    return s;
  }

  std::string vertex_name()
  {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (!std::isalnum(c) && c != '_' && c != '\'' && c != '.')
        break;
      ++pos_;
    }
    if (start == pos_)
      fail("expected a vertex name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer()
  {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+')
      digits.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        digits.empty()) {
      pos_ = start;
      fail("expected an integer");
    }
    return v;
  }

  void skip_space()
  {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  DerivedModel const *model_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

DerivedObject parse_object(DerivedModel const &model, std::string_view text)
{
  LiteralParser p(&model, text);
  DerivedObject x = p.object();
  if (!p.at_end())
    p.fail("trailing characters");
  return x;
}

std::vector<DerivedObject> parse_object_list(DerivedModel const &model,
                                             std::string_view text)
{
  LiteralParser p(&model, text);
  std::vector<DerivedObject> out;
  if (p.at_end())
    return out;
  do
    out.push_back(p.object());
  while (p.accept(','));
  if (!p.at_end())
    p.fail("trailing characters");
  return out;
}

DimVector parse_dim_vector(std::string_view text)
{
  LiteralParser p(nullptr, text);
  p.accept("dim=");
  DimVector d = p.dims();
  if (!p.at_end())
    p.fail("trailing characters");
  return d;
}

} // namespace orbitcat

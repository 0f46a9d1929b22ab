#include "lincomp/param.hpp"

#include <cctype>
#include <charconv>

#include "lincomp/error.hpp"

namespace lincomp {

std::string Param::symbol() const {
  if (to < 10 && from < 10) {
    return "a" + std::to_string(to) + std::to_string(from);
  }
  return "a" + std::to_string(to) + "_" + std::to_string(from);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad parameter index '" + std::string(s) + "'", 0);
  }
  return v;
}

}  // namespace

Param Param::parse(std::string_view text) {
  if (text.size() < 3 || text.front() != 'a') {
    throw ParseError("bad parameter symbol '" + std::string(text) + "'", 0);
  }
  std::string_view body = text.substr(1);
  Param p;
  if (auto us = body.find('_'); us != std::string_view::npos) {
    auto lhs = body.substr(0, us);
    auto rhs = body.substr(us + 1);
    if (!all_digits(lhs) || !all_digits(rhs)) {
      throw ParseError("bad parameter symbol '" + std::string(text) + "'", 0);
    }
    p = Param{to_int(lhs), to_int(rhs)};
  } else {
    if (body.size() != 2 || !all_digits(body)) {
      throw ParseError("bad parameter symbol '" + std::string(text) + "'", 0);
    }
    p = Param{body[0] - '0', body[1] - '0'};
  }
  if (p.from <= 0 || p.to < 0 || p.to == p.from) {
    throw ParseError("bad parameter symbol '" + std::string(text) + "'", 0);
  }
  return p;
}

}  // namespace lincomp

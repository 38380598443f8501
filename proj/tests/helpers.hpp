#pragma once

#include "random_sf.hpp"

#include <doctest.h>

#include "repstab/serialize.hpp"

namespace doctest {
template <>
struct StringMaker<repstab::SymmetricFunction> {
  static String convert(const repstab::SymmetricFunction& f) {
    std::string out = f.basis() == repstab::Basis::Schur ? "" : "(power) ";
    out += repstab::to_text(f).substr(0, 400);
    return out.c_str();
  }
};
}  // namespace doctest

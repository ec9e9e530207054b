#ifndef VEECH_TESTS_PUBLISHED_HPP
#define VEECH_TESTS_PUBLISHED_HPP

#include <array>

// Non-arithmetic survivors of the sieve at epsilon = 0.05 on at most nine
// rectangles, as published: twist vectors n, n' and the pair (r, r').
// The last two are the genus-3 Prym candidates. Two entries are not
// permutations as printed and one pair is listed twice.
struct PublishedEntry
{
  const char *n;
  const char *n_vert;
  const char *r;
  const char *r_down;
};

inline constexpr std::array<PublishedEntry, 50> kPublished{{
    {"(3,4)", "(1,2)", "(0,1,2,3,4)(5,6,7,8)", "(0,3,1,6,5,8)(4,2,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,3,4,5,6,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,4,3,5,6,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,5,3,4,6,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,4,5,3,6,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,3,5,4,6,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,5,4,3,6,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,6,3,4,5,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,4,6,3,5,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,5,6,3,4,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,4,5,6,3,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,6,3,5,4,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,5,4,6,3,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,3,6,4,5,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,6,4,3,5,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,5,3,6,4,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,6,4,5,3,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,3,5,6,4,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,5,6,4,3,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,3,5,6,4,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,3,4,6,5,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,4,3,6,5,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,6,5,3,4,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,4,6,5,3,2,8)(1,7)"},
    {"(1,4)", "(1,4)", "(0,1,2,3,4,5,6)(7,8)", "(0,3,6,5,4,2,8)(1,7)"},
    {"(1,2)", "(1,3)", "(0,1,2,3,4)(5,6,7)", "(0,5,1,6,2,7)(3,4)"},
    {"(1,2)", "(1,3)", "(0,1,2,3,4)(5,6,7)", "(1,4,6,2,3,5)(0,7)"},
    {"(1,2)", "(1,2)", "(0,1,2,3,4)(5,6,7)", "(0,2,4,6,7)(1,3,5)"},
    {"(1,2)", "(1,2)", "(0,1,2,3,4)(5,6,7)", "(0,4,3,6,7)(1,2,5)"},
    {"(1,2)", "(1,2)", "(0,1,2,3,4)(5,6,7)", "(0,5,2,3,7)(1,3,6)"},
    {"(1,2)", "(1,2)", "(0,1,2,3,4)(5,6,7)", "(1,3,6,2,5)(0,4,7)"},
    {"(1,2)", "(1,2)", "(0,1,2,3,4)(5,6,7)", "(0,5,1,4,7)(2,3,6)"},
    {"(1,2)", "(1,2)", "(0,1,2,3,4)(5,6,7)", "(0,6,2,3,7)(1,4,5)"},
    {"(1,2)", "(1,2)", "(0,1,2,3,4)(5,6,7)", "(0,5,1,3,7)(2,4,6)"},
    {"(1,2)", "(1,2)", "(0,1,2,3,4)(5,6,7)", "(0,4,6,2,7)(1,3,5)"},
    {"(1,2)", "(1,2)", "(0,1,2,3,5)(5,6,7)", "(0,6,3,2,7)(1,4,5)"},
    {"(1,2)", "(1,1)", "(0,1,2,3,4)(5,6,7)", "(0,3,6,7)(1,4,2,5)"},
    {"(2,7)", "(2,7)", "(0,1,2,3,4,5)(6,7)", "(0,3,4,5,2,7)(1,6)"},
    {"(1,1)", "(1,1)", "(0,1,2,3)(4,5,6)", "(0,3,5,6)(1,2,4)"},
    {"(1,2)", "(1,2)", "(0,1,2,3)(4,5,6)", "(0,3,5,6)(1,2,4)"},
    {"(1,2)", "(1,2)", "(0,1,2,3)(4,5,6)", "(0,2,4,6)(1,3,5)"},
    {"(1,2)", "(1,2)", "(0,1,2,3)(4,5,6)", "(1,4,2,5)(0,3,6)"},
    {"(1,2)", "(1,2)", "(0,1,2,3)(4,5,6)", "(1,5,2,4)(0,3,6)"},
    {"(1,2)", "(1,2)", "(0,1,2,3)(4,5,6)", "(0,2,4,6)(1,5,3)"},
    {"(1,2)", "(1,2)", "(0,1,2,3)(4,5,6)", "(0,1,4,6)(2,5,3)"},
    {"(1,3)", "(1,3)", "(0,1,2,3,4)(5,6)", "(0,3,4,2,6)(1,5)"},
    {"(1,3)", "(1,3)", "(0,1,2,3)(4,5)", "(0,2,3,5)(1,4)"},
    {"(1,3)", "(1,3)", "(0,1,2,3)(4,5)", "(0,1,3,5)(2,4)"},
    {"(1,1,1)", "(1,1,1)", "(0,1,2)(3,4)(5,6)", "(0,4,6)(1,5)(2,3)"},
    {"(1,1,1)", "(1,1,1)", "(0,1,2)(3,4)(5,6)", "(1,4,5)(0,6)(2,3)"},
}};

inline constexpr std::size_t kPublishedGenus2 = 48;

#endif // VEECH_TESTS_PUBLISHED_HPP

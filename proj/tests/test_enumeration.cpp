#include "doctest.h"

#include <set>

#include "cpmoments/enumeration.hpp"

using namespace cpmom;

namespace {

// Reference count by blunt nested iteration over all candidate vectors.
unsigned brute_deriv_tuple_count(unsigned n) {
  const unsigned half = n / 2;
  std::vector<unsigned> a(half + 1, 0);
  unsigned count = 0;
  auto rec = [&](auto&& self, unsigned j) -> void {
    if (j > half) {
      unsigned w = 0;
      for (unsigned t = 1; t <= half; ++t) w += 2 * t * a[t];
      if (w <= n) ++count;  // a0 = n - w is then determined
      return;
    }
    for (a[j] = 0; 2 * j * a[j] <= n; ++a[j]) self(self, j + 1);
    a[j] = 0;
  };
  rec(rec, 1);
  return count;
}

}  // namespace

TEST_CASE("deriv tuples basic") {
  auto t0 = enum_deriv_tuples(0);
  REQUIRE(t0.size() == 1);
  CHECK(t0[0].a0 == 0);
  CHECK(t0[0].higher.empty());

  auto t2 = enum_deriv_tuples(2);
  REQUIRE(t2.size() == 2);
  CHECK(t2[0].a0 == 2);
  CHECK(t2[0].higher == std::vector<unsigned>{0});
  CHECK(t2[1].a0 == 0);
  CHECK(t2[1].higher == std::vector<unsigned>{1});

  auto t3 = enum_deriv_tuples(3);
  REQUIRE(t3.size() == 2);
  CHECK(t3[0].a0 == 3);
  CHECK(t3[1].a0 == 1);
  CHECK(t3[1].higher == std::vector<unsigned>{1});
}

TEST_CASE("deriv tuples invariants and counts") {
  for (unsigned n = 0; n <= 12; ++n) {
    auto tuples = enum_deriv_tuples(n);
    CHECK(tuples.size() == brute_deriv_tuple_count(n));
    std::set<std::vector<unsigned>> seen;
    for (const auto& t : tuples) {
      unsigned w = t.a0;
      for (unsigned j = 1; j <= t.higher.size(); ++j) w += 2 * j * t.higher[j - 1];
      CHECK(w == n);
      CHECK(t.a0 % 2 == n % 2);
      seen.insert(t.higher);
    }
    CHECK(seen.size() == tuples.size());
    CHECK(enum_deriv_tuples(n) == tuples);  // deterministic
  }
  CHECK(enum_deriv_tuples(4)[0].tuple_factorial() == 24);  // (4; 0,0)
}

TEST_CASE("weak compositions") {
  auto c = enum_weak_compositions(1, 2);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == std::vector<unsigned>{0, 1});
  CHECK(c[1] == std::vector<unsigned>{1, 0});

  CHECK(enum_weak_compositions(0, 5) ==
        std::vector<std::vector<unsigned>>{{0, 0, 0, 0, 0}});

  auto c22 = enum_weak_compositions(2, 2);
  REQUIRE(c22.size() == 3);
  CHECK(c22[0] == std::vector<unsigned>{0, 2});
  CHECK(c22[1] == std::vector<unsigned>{1, 1});
  CHECK(c22[2] == std::vector<unsigned>{2, 0});

  for (unsigned total = 0; total <= 10; ++total)
    for (unsigned parts = 1; parts <= 6; ++parts)
      CHECK(enum_weak_compositions(total, parts).size() ==
            binomial(total + parts - 1, parts - 1));
}

TEST_CASE("bounded row matrices") {
  BoundedRowMatrix m;

  // rows = 0: exactly one empty matrix
  BoundedRowMatrixStream empty(0, 3, 5);
  CHECK(empty.next(m));
  CHECK(m.entries.empty());
  CHECK_FALSE(empty.next(m));

  // 1x1 with 2e <= 2
  BoundedRowMatrixStream s1(1, 1, 2);
  std::vector<unsigned> seen;
  while (s1.next(m)) seen.push_back(m.at(0, 0));
  CHECK(seen == std::vector<unsigned>{0, 1});

  // 1x2 with 2(e1+e2) <= 3: brute force gives {(0,0),(0,1),(1,0)}
  BoundedRowMatrixStream s2(1, 2, 3);
  std::vector<std::vector<unsigned>> rows;
  while (s2.next(m)) rows.push_back(m.entries);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<unsigned>{0, 0});
  CHECK(rows[1] == std::vector<unsigned>{0, 1});
  CHECK(rows[2] == std::vector<unsigned>{1, 0});

  // count = (admissible single rows)^rows, every row bound honored
  BoundedRowMatrixStream s3(2, 2, 4);
  const std::size_t per_row = s3.row_option_count();
  std::size_t count = 0;
  while (s3.next(m)) {
    ++count;
    for (unsigned i = 0; i < m.rows; ++i) CHECK(2 * m.row_sum(i) <= 4);
  }
  CHECK(count == per_row * per_row);

  // deterministic restart
  BoundedRowMatrixStream a(2, 2, 3), b(2, 2, 3);
  BoundedRowMatrix ma, mb;
  while (a.next(ma)) {
    REQUIRE(b.next(mb));
    CHECK(ma.entries == mb.entries);
  }
  CHECK_FALSE(b.next(mb));
}

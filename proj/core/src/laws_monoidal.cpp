#include "polycalc/closures.hpp"
#include "law_helpers.hpp"

namespace poly::lawdetail {

namespace {

// [p,q] -> [r <| p, r <| q], via duoidality and the Dirichlet adjunction
PolyMap a12_left_map(const Poly& p, const Poly& q, const Poly& r) {
  Poly pq = dirichlet_closure(p, q);
  Poly rp = substitute(r, p), rq = substitute(r, q);
  PolyMap sym1 = product_sym(ProductKind::Tensor, pq, rp).fwd;
  PolyMap duo = duoidal_map(r, p, poly_y(), pq);  // (r<|p) ox pq -> r <| (p ox pq)
  PolyMap inner_sym = subst_map(identity_map(r), product_sym(ProductKind::Tensor, p, pq).fwd);
  PolyMap inner_ev = subst_map(identity_map(r), dirichlet_eval(p, q));
  PolyMap chi = compose(inner_ev, compose(inner_sym, compose(duo, sym1)));
  return transpose_dirichlet(pq, rp, rq, chi);
}

// [p,q] -> [p <| r, q <| r]
PolyMap a12_right_map(const Poly& p, const Poly& q, const Poly& r) {
  Poly pq = dirichlet_closure(p, q);
  Poly pr = substitute(p, r), qr = substitute(q, r);
  PolyMap duo = duoidal_map(pq, poly_y(), p, r);  // pq ox (p<|r) -> (pq ox p) <| r
  PolyMap chi = compose(subst_map(dirichlet_eval(p, q), identity_map(r)), duo);
  return transpose_dirichlet(pq, pr, qr, chi);
}

std::vector<Bindings> three_poly_defaults() {
  return {bind_polys({{"p", poly_y()}, {"q1", representable(2)}, {"q2", poly_one()}}),
          bind_polys({{"p", coproduct(representable(2), poly_y())}, {"q1", linear(2)}, {"q2", poly_y()}}),
          bind_polys({{"p", constant(2)}, {"q1", poly_zero()}, {"q2", coproduct(poly_y(), poly_one())}})};
}

std::vector<Bindings> subst_distrib_defaults() {
  return {bind_polys({{"p", poly_y()}, {"p2", representable(2)}, {"q", coproduct(poly_y(), poly_one())}}),
          bind_polys({{"p", coproduct(representable(2), poly_one())}, {"p2", poly_y()}, {"q", linear(2)}}),
          bind_polys({{"p", poly_zero()}, {"p2", constant(2)}, {"q", representable(2)}})};
}

std::vector<Bindings> four_poly_defaults() {
  return {bind_polys({{"p1", poly_y()}, {"p2", representable(2)}, {"q1", poly_y()}, {"q2", poly_y()}}),
          bind_polys({{"p1", coproduct(poly_y(), poly_one())}, {"p2", linear(2)},
                      {"q1", representable(2)}, {"q2", coproduct(poly_y(), poly_one())}}),
          bind_polys({{"p1", constant(2)}, {"p2", poly_y()}, {"q1", poly_one()}, {"q2", linear(2)}})};
}

std::vector<Bindings> two_poly_defaults() {
  return {bind_polys({{"p", representable(2)}, {"q", poly_y()}}),
          bind_polys({{"p", coproduct(poly_y(), poly_one())}, {"q", linear(2)}}),
          bind_polys({{"p", poly_zero()}, {"q", coproduct(representable(2), poly_one())}}),
          bind_polys({{"p", constant(2)}, {"q", poly_one()}})};
}

}  // namespace

std::vector<Law> monoidal_laws() {
  std::vector<Law> laws;

  auto day_dist = [](DayKind k, const char* name, const char* stmt) {
    Law law;
    law.name = name;
    law.statement = stmt;
    law.params = {"p", "q1", "q2"};
    law.run = [k, stmt = std::string(stmt)](const Bindings& b) {
      return check_iso_law(
          [&] { return day_distributivity(k, b.poly("p"), b.poly("q1"), b.poly("q2")); }, stmt);
    };
    law.defaults = three_poly_defaults();
    return law;
  };
  laws.push_back(day_dist(DayKind::Times, "A1.1", "p*(q1+q2) ~= p*q1 + p*q2"));
  laws.push_back(day_dist(DayKind::Tensor, "A1.2", "p ox (q1+q2) ~= (p ox q1) + (p ox q2)"));
  laws.push_back(day_dist(DayKind::Ovee, "A1.3", "p ovee (q1+q2) ~= (p ovee q1) + (p ovee q2)"));

  {
    Law law;
    law.name = "A2";
    law.statement = "(p+p2) <| q ~= (p<|q) + (p2<|q)";
    law.params = {"p", "p2", "q"};
    law.run = [](const Bindings& b) {
      return check_iso_law([&] { return subst_plus_distrib(b.poly("p"), b.poly("p2"), b.poly("q")); },
                           "(p+p2) <| q");
    };
    law.defaults = subst_distrib_defaults();
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A3";
    law.statement = "(p*p2) <| q ~= (p<|q) * (p2<|q)";
    law.params = {"p", "p2", "q"};
    law.run = [](const Bindings& b) {
      return check_iso_law([&] { return subst_times_distrib(b.poly("p"), b.poly("p2"), b.poly("q")); },
                           "(p*p2) <| q");
    };
    law.defaults = subst_distrib_defaults();
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A4";
    law.statement = "(p1<|p2) ox (q1<|q2) -> (p1 ox q1) <| (p2 ox q2)";
    law.params = {"p1", "p2", "q1", "q2"};
    law.run = [](const Bindings& b) {
      const Poly &p1 = b.poly("p1"), &p2 = b.poly("p2"), &q1 = b.poly("q1"), &q2 = b.poly("q2");
      return check_map_law(
          [&] { return duoidal_map(p1, p2, q1, q2); },
          [&](const PolyMap&) {
            Sampler s;
            for (int trial = 0; trial < 3; ++trial) {
              PolyMap f1 = s.hom_from(p1), f2 = s.hom_from(p2);
              PolyMap g1 = s.hom_from(q1), g2 = s.hom_from(q2);
              PolyMap top = compose(duoidal_map(f1.tgt, f2.tgt, g1.tgt, g2.tgt),
                                    tensor_map(subst_map(f1, f2), subst_map(g1, g2)));
              PolyMap bot = compose(subst_map(tensor_map(f1, g1), tensor_map(f2, g2)),
                                    duoidal_map(p1, p2, q1, q2));
              if (!map_equal(top, bot)) return false;
            }
            return true;
          },
          "duoidal interchange");
    };
    law.defaults = four_poly_defaults();
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A5";
    law.statement = "p ox q -> p <| q";
    law.params = {"p", "q"};
    law.run = [](const Bindings& b) {
      const Poly &p = b.poly("p"), &q = b.poly("q");
      return check_map_law(
          [&] { return indep_map(p, q); },
          [&](const PolyMap&) {
            Sampler s;
            for (int trial = 0; trial < 4; ++trial) {
              PolyMap f = s.hom_from(p), g = s.hom_from(q);
              PolyMap top = compose(indep_map(f.tgt, g.tgt), tensor_map(f, g));
              PolyMap bot = compose(subst_map(f, g), indep_map(p, q));
              if (!map_equal(top, bot)) return false;
            }
            return true;
          },
          "independence map");
    };
    law.defaults = two_poly_defaults();
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A6.1";
    law.statement = "Ay ox q ~= Ay <| q";
    law.params = {"A", "q"};
    law.run = [](const Bindings& b) {
      return check_iso_law([&] { return invert(indep_map(linear(b.integer("A")), b.poly("q"))); },
                           "linear independence iso");
    };
    law.defaults = {bind_polys({{"q", representable(2)}}, {{"A", 2}}),
                    bind_polys({{"q", coproduct(poly_y(), poly_one())}}, {{"A", 3}}),
                    bind_polys({{"q", poly_one()}}, {{"A", 1}})};
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A6.2";
    law.statement = "p ox y^A ~= p <| y^A";
    law.params = {"p", "A"};
    law.run = [](const Bindings& b) {
      return check_iso_law([&] { return invert(indep_map(b.poly("p"), representable(b.integer("A")))); },
                           "representable independence iso");
    };
    law.defaults = {bind_polys({{"p", coproduct(representable(2), poly_y())}}, {{"A", 2}}),
                    bind_polys({{"p", linear(2)}}, {{"A", 3}}),
                    bind_polys({{"p", constant(2)}}, {{"A", 0}})};
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A7.1";
    law.statement = "1 -> y <| 1";
    law.run = [](const Bindings&) {
      return check_map_law([&] { return one_to_y_sub_one(); }, nullptr, "unit comparison");
    };
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A7.2";
    law.statement = "(p1<|p2) x (q1<|q2) -> (p1 ox q1) <| (p2 x q2)";
    law.params = {"p1", "p2", "q1", "q2"};
    law.run = [](const Bindings& b) {
      const Poly &p1 = b.poly("p1"), &p2 = b.poly("p2"), &q1 = b.poly("q1"), &q2 = b.poly("q2");
      return check_map_law(
          [&] { return duoidal_times_map(p1, p2, q1, q2); },
          [&](const PolyMap&) {
            Sampler s;
            for (int trial = 0; trial < 3; ++trial) {
              PolyMap f1 = s.hom_from(p1), f2 = s.hom_from(p2);
              PolyMap g1 = s.hom_from(q1), g2 = s.hom_from(q2);
              PolyMap top = compose(duoidal_times_map(f1.tgt, f2.tgt, g1.tgt, g2.tgt),
                                    times_map(subst_map(f1, f2), subst_map(g1, g2)));
              PolyMap bot = compose(subst_map(tensor_map(f1, g1), times_map(f2, g2)),
                                    duoidal_times_map(p1, p2, q1, q2));
              if (!map_equal(top, bot)) return false;
            }
            return true;
          },
          "x/ox duoidal map");
    };
    law.defaults = four_poly_defaults();
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A8";
    law.statement = "(p+y) ox (q+y) ~= (p v q) + y";
    law.params = {"p", "q"};
    law.run = [](const Bindings& b) {
      return check_iso_law([&] { return vee_strong_monoidal(b.poly("p"), b.poly("q")); },
                           "vee strong monoidality");
    };
    law.defaults = two_poly_defaults();
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A9";
    law.statement = "p + q -> p v q";
    law.params = {"p", "q"};
    law.run = [](const Bindings& b) {
      const Poly &p = b.poly("p"), &q = b.poly("q");
      return check_map_law(
          [&] { return plus_to_vee(p, q); },
          [&](const PolyMap&) {
            Sampler s;
            for (int trial = 0; trial < 4; ++trial) {
              PolyMap f = s.hom_from(p), g = s.hom_from(q);
              PolyMap top = compose(plus_to_vee(f.tgt, g.tgt), coproduct_map(f, g));
              PolyMap bot = compose(vee_map(f, g), plus_to_vee(p, q));
              if (!map_equal(top, bot)) return false;
            }
            return true;
          },
          "vee lax unit map");
    };
    law.defaults = two_poly_defaults();
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A10.1";
    law.statement = "(p1<|p2) v (q1<|q2) -> (p1 v q1) <| (p2 v q2)";
    law.params = {"p1", "p2", "q1", "q2"};
    law.run = [](const Bindings& b) {
      const Poly &p1 = b.poly("p1"), &p2 = b.poly("p2"), &q1 = b.poly("q1"), &q2 = b.poly("q2");
      return check_map_law(
          [&] { return vee_sub_duoidal(p1, p2, q1, q2); },
          [&](const PolyMap&) {
            Sampler s;
            for (int trial = 0; trial < 2; ++trial) {
              PolyMap f1 = s.hom_from(p1), f2 = s.hom_from(p2);
              PolyMap g1 = s.hom_from(q1), g2 = s.hom_from(q2);
              PolyMap top = compose(vee_sub_duoidal(f1.tgt, f2.tgt, g1.tgt, g2.tgt),
                                    vee_map(subst_map(f1, f2), subst_map(g1, g2)));
              PolyMap bot = compose(subst_map(vee_map(f1, g1), vee_map(f2, g2)),
                                    vee_sub_duoidal(p1, p2, q1, q2));
              if (!map_equal(top, bot)) return false;
            }
            return true;
          },
          "v/<| duoidal map");
    };
    law.defaults = four_poly_defaults();
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A10.2";
    law.statement = "(p1 ox p2) v (q1 ox q2) -> (p1 v q1) ox (p2 v q2)";
    law.params = {"p1", "p2", "q1", "q2"};
    law.run = [](const Bindings& b) {
      const Poly &p1 = b.poly("p1"), &p2 = b.poly("p2"), &q1 = b.poly("q1"), &q2 = b.poly("q2");
      return check_map_law(
          [&] { return vee_tensor_duoidal(p1, p2, q1, q2); },
          [&](const PolyMap&) {
            Sampler s;
            for (int trial = 0; trial < 2; ++trial) {
              PolyMap f1 = s.hom_from(p1), f2 = s.hom_from(p2);
              PolyMap g1 = s.hom_from(q1), g2 = s.hom_from(q2);
              PolyMap top = compose(vee_tensor_duoidal(f1.tgt, f2.tgt, g1.tgt, g2.tgt),
                                    vee_map(tensor_map(f1, f2), tensor_map(g1, g2)));
              PolyMap bot = compose(tensor_map(vee_map(f1, g1), vee_map(f2, g2)),
                                    vee_tensor_duoidal(p1, p2, q1, q2));
              if (!map_equal(top, bot)) return false;
            }
            return true;
          },
          "v/ox duoidal map");
    };
    law.defaults = four_poly_defaults();
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A11.1";
    law.statement = "Iy^A dag Jy^B ~= IJ y^{A B^I}";
    law.params = {"I", "A", "J", "B"};
    law.run = [](const Bindings& b) {
      int i = b.integer("I"), a = b.integer("A"), j = b.integer("J"), bb = b.integer("B");
      return check_iso_law(
          [&] {
            Poly lhs = dagger(monomial(i, a), monomial(j, bb));
            Poly rhs = monomial(i * j, static_cast<int>(checked_mul(
                                           static_cast<std::uint64_t>(a),
                                           checked_pow(static_cast<std::uint64_t>(bb),
                                                       static_cast<std::uint64_t>(i)))));
            return literal_witness(lhs, rhs, "dagger monomial");
          },
          "dagger monomial law");
    };
    law.defaults = {bind_polys({}, {{"I", 2}, {"A", 3}, {"J", 3}, {"B", 2}}),
                    bind_polys({}, {{"I", 1}, {"A", 2}, {"J", 2}, {"B", 3}}),
                    bind_polys({}, {{"I", 3}, {"A", 1}, {"J", 1}, {"B", 3}})};
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A11.2";
    law.statement = "Iy^A ddag Jy^B ~= IJ y^{A^J B^I}";
    law.params = {"I", "A", "J", "B"};
    law.run = [](const Bindings& b) {
      int i = b.integer("I"), a = b.integer("A"), j = b.integer("J"), bb = b.integer("B");
      return check_iso_law(
          [&] {
            Poly lhs = ddagger(monomial(i, a), monomial(j, bb));
            std::uint64_t e = checked_mul(checked_pow(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(j)),
                                          checked_pow(static_cast<std::uint64_t>(bb), static_cast<std::uint64_t>(i)));
            return literal_witness(lhs, monomial(i * j, static_cast<int>(e)), "ddagger monomial");
          },
          "ddagger monomial law");
    };
    law.defaults = {bind_polys({}, {{"I", 2}, {"A", 3}, {"J", 3}, {"B", 2}}),
                    bind_polys({}, {{"I", 1}, {"A", 3}, {"J", 2}, {"B", 2}}),
                    bind_polys({}, {{"I", 3}, {"A", 2}, {"J", 2}, {"B", 1}})};
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A12.1";
    law.statement = "[p,q] -> [r<|p, r<|q]";
    law.params = {"p", "q", "r"};
    law.run = [](const Bindings& b) {
      const Poly &p = b.poly("p"), &q = b.poly("q"), &r = b.poly("r");
      return check_map_law(
          [&] { return a12_left_map(p, q, r); },
          [&](const PolyMap&) {
            Sampler s;
            for (int trial = 0; trial < 2; ++trial) {
              PolyMap psi = s.hom_from(q);
              PolyMap top = compose(a12_left_map(p, psi.tgt, r),
                                    dirichlet_map(identity_map(p), psi));
              PolyMap bot = compose(dirichlet_map(identity_map(substitute(r, p)),
                                                  subst_map(identity_map(r), psi)),
                                    a12_left_map(p, q, r));
              if (!map_equal(top, bot)) return false;
            }
            return true;
          },
          "hom transport along r<|(-)");
    };
    law.defaults = {bind_polys({{"p", poly_y()}, {"q", representable(2)}, {"r", poly_y()}}),
                    bind_polys({{"p", representable(2)}, {"q", poly_y()}, {"r", coproduct(poly_y(), poly_one())}}),
                    bind_polys({{"p", coproduct(poly_y(), poly_one())}, {"q", linear(2)}, {"r", poly_y()}})};
    laws.push_back(std::move(law));
  }
  {
    Law law;
    law.name = "A12.2";
    law.statement = "[p,q] -> [p<|r, q<|r]";
    law.params = {"p", "q", "r"};
    law.run = [](const Bindings& b) {
      const Poly &p = b.poly("p"), &q = b.poly("q"), &r = b.poly("r");
      return check_map_law(
          [&] { return a12_right_map(p, q, r); },
          [&](const PolyMap&) {
            Sampler s;
            for (int trial = 0; trial < 2; ++trial) {
              PolyMap psi = s.hom_from(q);
              PolyMap top = compose(a12_right_map(p, psi.tgt, r),
                                    dirichlet_map(identity_map(p), psi));
              PolyMap bot = compose(dirichlet_map(identity_map(substitute(p, r)),
                                                  subst_map(psi, identity_map(r))),
                                    a12_right_map(p, q, r));
              if (!map_equal(top, bot)) return false;
            }
            return true;
          },
          "hom transport along (-)<|r");
    };
    law.defaults = {bind_polys({{"p", poly_y()}, {"q", representable(2)}, {"r", poly_y()}}),
                    bind_polys({{"p", representable(2)}, {"q", poly_y()}, {"r", coproduct(poly_y(), poly_one())}}),
                    bind_polys({{"p", linear(2)}, {"q", poly_y()}, {"r", representable(2)}})};
    laws.push_back(std::move(law));
  }

  return laws;
}

}  // namespace poly::lawdetail

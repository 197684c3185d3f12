#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybx/dunklrep.hpp"

using namespace ybx;

TEST_CASE("bruhat rule") {
    RepFamily F = bruhat_rep(2);
    // u_12 [12] = [21], u_12 [21] = 0
    int id = F.basis.index[Permutation::identity(2)];
    int w0 = F.basis.index[Permutation::w0(2)];
    CHECK(F.u(1, 2).row(w0).at(id) == ExactPoly(1));
    CHECK(F.u(1, 2).row(id).empty());
    // 3-term matrix identity at n = 3 (6x6)
    RepFamily G = bruhat_rep(3);
    CHECK((G.u(1, 2) * G.u(2, 3) - G.u(1, 3) * G.u(1, 2) - G.u(2, 3) * G.u(1, 3)).is_zero());
    // sum of Dunkl elements vanishes
    LinOp s(G.basis.dim());
    for (int i = 1; i <= 3; ++i) s = s + G.dunkl(i);
    CHECK(s.is_zero());
}

TEST_CASE("bruhat relations and vanishing") {
    for (int n = 2; n <= 4; ++n) {
        CHECK(relations_check(bruhat_rep(n), RepKind::bruhat).all_pass());
        CHECK(vanishing_check(n, RepKind::bruhat).all_pass());
    }
}

TEST_CASE("quantum bruhat") {
    RepFamily F = quantum_bruhat_rep(2);
    int id = F.basis.index[Permutation::identity(2)];
    int w0 = F.basis.index[Permutation::w0(2)];
    // u_12 [21] = q_1 [12]
    CHECK(F.u(1, 2).row(id).at(w0) == ExactPoly::var(VarId::Qi(1)));
    for (int n = 2; n <= 4; ++n) {
        CHECK(relations_check(quantum_bruhat_rep(n), RepKind::qbruhat).all_pass());
        CHECK(vanishing_check(n, RepKind::qbruhat).all_pass());
    }
    // commutator [theta_1, theta_2] on Z[q][S_3]
    RepFamily G = quantum_bruhat_rep(3);
    CHECK((G.dunkl(1) * G.dunkl(2) - G.dunkl(2) * G.dunkl(1)).is_zero());
}

TEST_CASE("quantum elementary polynomials") {
    auto qv = symbolic_qij(3);
    std::vector<ExactPoly> xs{ExactPoly::var(VarId::X(1)), ExactPoly::var(VarId::X(2)),
                              ExactPoly::var(VarId::X(3))};
    // e_1^q = e_1
    CHECK(quantum_elementary(1, xs, qv) == xs[0] + xs[1] + xs[2]);
    // e_2^q(x1,x2) = x1 x2 + q_12
    auto qv2 = symbolic_qij(2);
    std::vector<ExactPoly> xs2{xs[0], xs[1]};
    CHECK(quantum_elementary(2, xs2, qv2) ==
          xs[0] * xs[1] + ExactPoly::var(VarId::Qij(1, 2)));
    // e_3^q(x1..x3) = x1x2x3 + q12 x3 + q13 x2 + q23 x1
    CHECK(quantum_elementary(3, xs, qv) ==
          xs[0] * xs[1] * xs[2] + ExactPoly::var(VarId::Qij(1, 2)) * xs[2] +
              ExactPoly::var(VarId::Qij(1, 3)) * xs[1] +
              ExactPoly::var(VarId::Qij(2, 3)) * xs[0]);
    // symmetry under simultaneous permutation of x and q indices (3 vars, e_2)
    ExactPoly e2 = quantum_elementary(2, xs, qv);
    std::map<VarId, ExactPoly> swap12{{VarId::X(1), xs[1]},
                                      {VarId::X(2), xs[0]},
                                      {VarId::Qij(1, 2), ExactPoly::var(VarId::Qij(1, 2))},
                                      {VarId::Qij(1, 3), ExactPoly::var(VarId::Qij(2, 3))},
                                      {VarId::Qij(2, 3), ExactPoly::var(VarId::Qij(1, 3))}};
    CHECK(e2.substitute(swap12) == e2);
    // q = 0 reduces to e_k
    std::map<VarId, ExactPoly> q0;
    for (auto& [key, v] : qv) q0[VarId::Qij(key.first, key.second)] = ExactPoly(0);
    CHECK(quantum_elementary(2, xs, qv).substitute(q0) ==
          xs[0] * xs[1] + xs[0] * xs[2] + xs[1] * xs[2]);
}

TEST_CASE("multiplicative Dunkl identities") {
    for (int n = 2; n <= 3; ++n) CHECK(multiplicative_dunkl_check(n).all_pass());
}

TEST_CASE("gaudin") {
    std::vector<Rat> z{Rat(0), Rat(1), Rat(3)};
    auto rep = gaudin_check(3, z);
    for (auto& line : rep.lines) {
        INFO(line.name);
        CHECK(line.pass);
    }
    CHECK(relations_check(gaudin_rep(3, z), RepKind::gaudin).all_pass());
    std::vector<Rat> z4{Rat(0), Rat(1), Rat(3), Rat(-2)};
    CHECK(gaudin_check(4, z4).all_pass());
    CHECK_THROWS(gaudin_rep(3, std::vector<Rat>{Rat(1), Rat(1), Rat(2)}));
}

TEST_CASE("fulton universal ring") {
    for (int n = 3; n <= 5; ++n) {
        auto rep = fulton_coeffs(n);
        for (auto& line : rep.checks.lines) {
            INFO(n, " ", line.name);
            CHECK(line.pass);
        }
    }
    // g_1[3] closed display:
    // q14((x2-x1)(x3-x1)+q23-q12) + q24(q13-q12)
    auto rep = fulton_coeffs(4);
    auto x = [](int i) { return ExactPoly::var(VarId::X(i)); };
    auto q = [](int i, int j) { return ExactPoly::var(VarId::Qij(i, j)); };
    ExactPoly expect = q(1, 4) * ((x(2) - x(1)) * (x(3) - x(1)) + q(2, 3) - q(1, 2)) +
                       q(2, 4) * (q(1, 3) - q(1, 2));
    CHECK(rep.g.at({1, 3}) == expect);
}

TEST_CASE("nabla representation") {
    auto rep = nabla_check(4, 5);
    for (auto& line : rep.lines) {
        INFO(line.name);
        CHECK(line.pass);
    }
    CHECK(nabla_check(3, 4).all_pass());
}

TEST_CASE("pfaffian hafnian") {
    std::vector<Rat> z{Rat(1), Rat(2), Rat(5), Rat(-1)};
    auto rep = pfaffian_hafnian_check(4, z);
    for (auto& line : rep.lines) {
        INFO(line.name);
        CHECK(line.pass);
    }
    // n = 2: det [[0, p], [-p, 0]] = p^2 = Hf
    std::vector<Rat> z2{Rat(0), Rat(3)};
    CHECK(pfaffian_hafnian_check(2, z2).all_pass());
    // n = 3 includes the t-coefficient checks of the skew determinant
    std::vector<Rat> z3{Rat(0), Rat(1), Rat(7, 2)};
    CHECK(pfaffian_hafnian_check(3, z3).all_pass());
}

TEST_CASE("jucys murphy commute") {
    // d_j = sum of q-weighted transpositions commute: realized inside
    // gaudin_check via G_00r; here check the classical JM directly at n = 4
    SnBasis basis(4);
    auto leftmul = [&](int a, int b) {
        LinOp op(basis.dim());
        for (int c = 0; c < basis.dim(); ++c) {
            std::vector<int> img = basis.elems[c].images();
            for (auto& v : img) {
                if (v == a) v = b;
                else if (v == b) v = a;
            }
            op.add(basis.index[Permutation(img)], c, ExactPoly(1));
        }
        return op;
    };
    std::vector<LinOp> d;
    for (int j = 2; j <= 4; ++j) {
        LinOp dj(basis.dim());
        for (int a = 1; a < j; ++a) dj = dj + leftmul(a, j);
        d.push_back(dj);
    }
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j)
            CHECK((d[i] * d[j] - d[j] * d[i]).is_zero());
}

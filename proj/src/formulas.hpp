#pragma once

// Printed closed forms as templates over a term evaluator T providing
//   cplx T::log(const char* label, cplx x)
//   cplx T::li(const char* label, int s, cplx x)
// so the same transcription can be recorded, evaluated on principal
// branches, or evaluated with continuation corrections. Each block below is
// one bracketed group of the printed formula; the labels name the block and
// the term within it.

#include "hzn/types.hpp"

namespace hzn::closed::formulas {

/// F_k(1;u,v)
template <class T>
cplx fk_at_1(T& t, cplx u, cplx v, int k) {
  const cplx l = t.log("log(1-u)", 1.0 - u);
  const cplx x = v * (u - 1.0) / (u - v);
  double kf = 1.0;
  for (int i = 2; i <= k; ++i) kf *= i;
  // Term j carries log^(k+1-j)(1-u) k! / (k+1-j)!.
  double coeff = kf;
  cplx lpow = 1.0;
  cplx sum = 0.0;
  for (int j = k + 1; j >= 1; --j) {
    const double sign = (j % 2) ? 1.0 : -1.0;
    sum += sign * coeff * lpow * t.li("Li_j(v(u-1)/(u-v))", j, x);
    lpow *= l;
    coeff /= static_cast<double>(k + 2 - j);
  }
  const double sign = (k % 2) ? 1.0 : -1.0;  // (-1)^(k+1)
  return sum + sign * kf * t.li("Li_{k+1}(v/(v-u))", k + 1, v / (v - u));
}

/// F(1;u,v,u) as printed for the u = w case
template <class T>
cplx f3_at_1_uvu(T& t, cplx u, cplx v) {
  const cplx l = t.log("log(1-u)", 1.0 - u);
  const cplx x = v * (u - 1.0) / (u - v);
  return -l * l * t.log("log(u(1-v)/(u-v))", u * (1.0 - v) / (u - v)) - 2.0 * l * t.li("Li2(v(u-1)/(u-v))", 2, x) +
         2.0 * t.li("Li3(v(u-1)/(u-v))", 3, x) - 2.0 * t.li("Li3(v/(v-u))", 3, v / (v - u));
}

/// F(1;u,v,w)
template <class T>
cplx f3_at_1(T& t, cplx u, cplx v, cplx w) {
  const cplx a = (v - u) * (w - 1.0) / ((v - w) * (u - 1.0));
  const cplx l1u = t.log("log(1-u)", 1.0 - u);

  const cplx b1 = l1u * t.log("b1 log(u(1-v)/(u-v))", u * (1.0 - v) / (u - v)) *
                      t.log("b1 log(v/(v-w))", v / (v - w)) -
                  t.log("b1 log(1-w)", 1.0 - w) * t.li("b1 Li2(v(1-u)/(v-u))", 2, v * (1.0 - u) / (v - u));

  const cplx b2 = -l1u * t.log("b2 log(w(1-v)/(w-v))", w * (1.0 - v) / (w - v)) *
                      t.log("b2 log(v(1-w)/(v-w))", v * (1.0 - w) / (v - w)) -
                  l1u * t.li("b2 Li2(v(1-w)/(v-w))", 2, v * (1.0 - w) / (v - w));

  const cplx b3 = -t.log("b3 log((v-u)/(v-w))", (v - u) / (v - w)) *
                  (t.li("b3 Li2(v(w-u)/(w(v-u)))", 2, v * (w - u) / (w * (v - u))) -
                   t.log("b3 log(w/(w-u))", w / (w - u)) *
                       t.log("b3 log(u(w-v)/(w(u-v)))", u * (w - v) / (w * (u - v))));

  const cplx b4 = t.log("b4 log(A)", a) *
                  (t.li("b4 Li2(A)", 2, a) + t.li("b4 Li2(v(1-u)/(v-u))", 2, v * (1.0 - u) / (v - u)) -
                   t.li("b4 Li2(v(1-w)/(v-w))", 2, v * (1.0 - w) / (v - w)) -
                   t.li("b4 Li2(u(1-w)/(w(1-u)))", 2, u * (1.0 - w) / (w * (1.0 - u))));

  const cplx l5a = t.log("b5 log((u-v)/(v(u-1)))", (u - v) / (v * (u - 1.0)));
  const cplx l5b = t.log("b5 log(v/(v-u))", v / (v - u));
  const cplx b5 = 0.5 * t.log("b5 log(w(u-v)/(u(w-v)))", w * (u - v) / (u * (w - v))) * (l5a * l5a - l5b * l5b);

  const cplx b6 = t.li("b6 Li3(v(1-w)/(v-w))", 3, v * (1.0 - w) / (v - w)) - t.li("b6 Li3(v/(v-w))", 3, v / (v - w)) +
                  t.li("b6 Li3(v(1-u)/(v-u))", 3, v * (1.0 - u) / (v - u)) - t.li("b6 Li3(v/(v-u))", 3, v / (v - u));

  const cplx b7 = t.li("b7 Li3(u(1-w)/(w(1-u)))", 3, u * (1.0 - w) / (w * (1.0 - u))) - t.li("b7 Li3(A)", 3, a) -
                  t.li("b7 Li3(u/w)", 3, u / w) + t.li("b7 Li3((v-u)/(v-w))", 3, (v - u) / (v - w));

  return b1 + b2 + b3 + b4 + b5 + b6 + b7;
}

/// I(u,v,w)
template <class T>
cplx lemma_I(T& t, cplx u, cplx v, cplx w) {
  const cplx a = (v - u) * (w - 1.0) / ((v - w) * (u - 1.0));
  const cplx b = (v - u) / (v - w);
  const cplx c = u * (1.0 - w) / (w * (1.0 - u));
  const cplx la = t.log("I log(A)", a);
  const cplx lb = t.log("I log(B)", b);

  const cplx logs = la * la * t.log("I log(w(v-1)/(v-w))", w * (v - 1.0) / (v - w)) -
                    lb * lb * t.log("I log(w/(w-v))", w / (w - v));
  const cplx dilog_a = 2.0 * la * (t.li("I Li2(A)", 2, a) - t.li("I Li2(u(1-w)/(w(1-u)))", 2, c));
  const cplx dilog_b = -2.0 * lb * (t.li("I Li2(B)", 2, b) - t.li("I Li2(u/w)", 2, u / w));
  const cplx trilog = 2.0 * t.li("I Li3(u(1-w)/(w(1-u)))", 3, c) - 2.0 * t.li("I Li3(A)", 3, a) -
                      2.0 * t.li("I Li3(u/w)", 3, u / w) + 2.0 * t.li("I Li3(B)", 3, b);
  return logs + dilog_a + dilog_b + trilog;
}

/// J(u,v,w) + J(w,v,u)
template <class T>
cplx lemma_J_pair(T& t, cplx u, cplx v, cplx w) {
  const cplx a = (v - u) * (w - 1.0) / ((v - w) * (u - 1.0));
  const cplx vw1 = v * (1.0 - w) / (v - w);
  const cplx vw = v / (v - w);
  const cplx vu1 = v * (1.0 - u) / (v - u);
  const cplx vu = v / (v - u);

  const cplx trilog = t.li("Jp Li3(v(1-w)/(v-w))", 3, vw1) - t.li("Jp Li3(v/(v-w))", 3, vw) +
                      t.li("Jp Li3(v(1-u)/(v-u))", 3, vu1) - t.li("Jp Li3(v/(v-u))", 3, vu);

  const cplx lb = t.log("Jp log((v-u)/(v-w))", (v - u) / (v - w));
  const cplx g = t.log("Jp log(w(u-v)/(u(w-v)))", w * (u - v) / (u * (w - v)));
  const cplx l_vw = t.log("Jp log(v/(v-w))", vw);
  const cplx l_vw1 = t.log("Jp log(v(1-w)/(v-w))", vw1);
  const cplx la = t.log("Jp log(A)", a);

  const cplx block_b =
      lb * (t.li("Jp Li2(v/(v-w))", 2, vw) + g * l_vw - t.li("Jp Li2(v/(v-u))", 2, vu));
  const cplx block_a =
      -la * (t.li("Jp Li2(v(1-w)/(v-w))", 2, vw1) + g * l_vw1 - t.li("Jp Li2(v(1-u)/(v-u))", 2, vu1));
  const cplx block_g = 0.5 * g * (l_vw1 * l_vw1 - l_vw * l_vw);
  const cplx block_sq = -0.5 * (t.log("Jp log(u(1-v)/(u-v))", u * (1.0 - v) / (u - v)) * la * la -
                                lb * lb * t.log("Jp log(u/(u-v))", u / (u - v)));
  const cplx block_last =
      -g * (l_vw1 * t.log("Jp log(w(1-u)/(w-u))", w * (1.0 - u) / (w - u)) -
            l_vw * t.log("Jp log(w/(w-u))", w / (w - u)) + t.li("Jp Li2(u(1-w)/(u-w))", 2, u * (1.0 - w) / (u - w)) -
            t.li("Jp Li2(u/(u-w))", 2, u / (u - w)));

  return trilog + block_b + block_a + block_g + block_sq + block_last + 0.5 * lemma_I(t, u, v, w);
}

}  // namespace hzn::closed::formulas

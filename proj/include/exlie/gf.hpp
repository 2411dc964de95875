// Finite fields F_{p^k} for p in {2,3}, small k, via Zech logarithm tables.
// Elements are stored as discrete logarithms: -1 encodes zero, n in [0, q-2]
// encodes g^n for the fixed primitive generator g.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace exlie {

class GF {
 public:
  static constexpr int ZERO = -1;

  GF(int p, int k) : p_(p), k_(k) {
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    build_tables();
  }

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  int zero() const { return ZERO; }
  int one() const { return 0; }
  // The fixed multiplicative generator (only meaningful for q > 2).
  int generator() const { return q_ > 2 ? 1 : 0; }

  bool is_zero(int a) const { return a == ZERO; }

  int add(int a, int b) const {
    if (a == ZERO) return b;
    if (b == ZERO) return a;
    // g^a + g^b = g^a (1 + g^{b-a})
    int d = b - a;
    if (d < 0) d += q_ - 1;
    int z = zech_[d];
    if (z == ZERO) return ZERO;
    int r = a + z;
    if (r >= q_ - 1) r -= q_ - 1;
    return r;
  }

  int neg(int a) const {
    if (a == ZERO) return ZERO;
    if (p_ == 2) return a;
    int r = a + neg_log_;
    if (r >= q_ - 1) r -= q_ - 1;
    return r;
  }

  int sub(int a, int b) const { return add(a, neg(b)); }

  int mul(int a, int b) const {
    if (a == ZERO || b == ZERO) return ZERO;
    int r = a + b;
    if (r >= q_ - 1) r -= q_ - 1;
    return r;
  }

  int inv(int a) const {
    if (a == ZERO) throw std::domain_error("GF::inv of zero");
    return a == 0 ? 0 : q_ - 1 - a;
  }

  int div(int a, int b) const { return mul(a, inv(b)); }

  int pow(int a, long long e) const {
    if (a == ZERO) {
      if (e == 0) return 0;
      if (e < 0) throw std::domain_error("GF::pow zero to negative power");
      return ZERO;
    }
    long long em = ((e % (q_ - 1)) + (q_ - 1)) % (q_ - 1);
    return static_cast<int>(static_cast<long long>(a) * em % (q_ - 1));
  }

  int frobenius(int a) const { return pow(a, p_); }

  // Embeds an integer via the prime subfield.
  int from_int(long long n) const {
    n %= p_;
    if (n < 0) n += p_;
    return log_of_value_[n];
  }

  // Integer value representation: coefficient vector of the polynomial basis
  // packed as sum c_i p^i. Stable across runs; used for printing and hashing.
  int value(int a) const { return a == ZERO ? 0 : exp_value_[a]; }
  int from_value(int v) const {
    if (v < 0 || v >= q_) throw std::out_of_range("GF::from_value");
    return log_of_value_[v];
  }

  // Every element, zero first then ascending powers of g.
  std::vector<int> elements() const {
    std::vector<int> r;
    r.push_back(ZERO);
    for (int i = 0; i < q_ - 1; ++i) r.push_back(i);
    return r;
  }

 private:
  int p_, k_, q_;
  std::vector<int> zech_;          // zech_[n] = log(1 + g^n), ZERO if it vanishes
  std::vector<int> exp_value_;     // exp_value_[n] = packed value of g^n
  std::vector<int> log_of_value_;  // inverse of the above; log_of_value_[0] = ZERO
  int neg_log_ = 0;                // log(-1)

  // Conway polynomials f(x) = x^k + ... , coefficients low to high (without
  // leading 1 is inconvenient; stored with it and asserted monic).
  static std::vector<int> conway(int p, int k) {
    if (p == 2) {
      switch (k) {
        case 1: return {1, 1};
        case 2: return {1, 1, 1};
        case 3: return {1, 1, 0, 1};
        case 4: return {1, 1, 0, 0, 1};
      }
    } else if (p == 3) {
      switch (k) {
        case 1: return {1, 1};
        case 2: return {2, 2, 1};
        case 3: return {1, 2, 0, 1};
        case 4: return {2, 0, 0, 2, 1};
      }
    }
    throw std::invalid_argument("GF: unsupported field F_" + std::to_string(p) + "^" +
                                std::to_string(k));
  }

  void build_tables() {
    std::vector<int> f = conway(p_, k_);
    if (static_cast<int>(f.size()) != k_ + 1 || f[k_] != 1)
      throw std::logic_error("GF: bad modulus polynomial");
    exp_value_.assign(q_ - 1, 0);
    log_of_value_.assign(q_, ZERO);
    // For k = 1 the generator is the root of f, i.e. -f[0]; otherwise x.
    std::vector<int> pow_(k_, 0);  // current power of g as coefficient vector
    if (k_ == 1) {
      int g = ((-f[0]) % p_ + p_) % p_;
      int cur = 1;
      for (int n = 0; n < q_ - 1; ++n) {
        exp_value_[n] = cur;
        if (log_of_value_[cur] != ZERO && n > 0)
          throw std::logic_error("GF: generator not primitive");
        log_of_value_[cur] = n;
        cur = cur * g % p_;
      }
    } else {
      pow_[0] = 1;  // g^0 = 1
      for (int n = 0; n < q_ - 1; ++n) {
        int val = 0, mult = 1;
        for (int i = 0; i < k_; ++i) {
          val += pow_[i] * mult;
          mult *= p_;
        }
        exp_value_[n] = val;
        if (log_of_value_[val] != ZERO && !(val == 1 && n == 0))
          throw std::logic_error("GF: generator not primitive");
        log_of_value_[val] = n;
        // multiply by x modulo f
        int carry = pow_[k_ - 1];
        for (int i = k_ - 1; i > 0; --i) pow_[i] = pow_[i - 1];
        pow_[0] = 0;
        if (carry != 0)
          for (int i = 0; i < k_; ++i) pow_[i] = ((pow_[i] - carry * f[i]) % p_ + p_) % p_;
      }
    }
    log_of_value_[0] = ZERO;
    // zech_[n] = log(1 + g^n) using value-domain addition.
    zech_.assign(q_ - 1, ZERO);
    for (int n = 0; n < q_ - 1; ++n) {
      int v = exp_value_[n];
      int sum = add_values(v, 1);
      zech_[n] = log_of_value_[sum];
    }
    // log(-1): for p = 2 it is log(1) = 0; otherwise half the group order.
    neg_log_ = (p_ == 2) ? 0 : (q_ - 1) / 2;
    // sanity: g^{neg_log} must equal the value of -1 = p-1 embedded.
    if (p_ != 2 && exp_value_[neg_log_] != value_of_scalar(p_ - 1))
      throw std::logic_error("GF: -1 is not g^{(q-1)/2}");
  }

  int add_values(int v1, int v2) const {
    int r = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
      int c = (v1 % p_ + v2 % p_) % p_;
      r += c * mult;
      mult *= p_;
      v1 /= p_;
      v2 /= p_;
    }
    return r;
  }

  int value_of_scalar(int c) const { return c % p_; }
};

}  // namespace exlie

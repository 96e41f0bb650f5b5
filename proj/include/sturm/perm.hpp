#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace sturm {

// One-line notation: at(j) is the value at position j, both 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int at(int j) const { return img_[j - 1]; }
  const std::vector<int>& image() const { return img_; }

  Permutation inverse() const;
  // (*this ∘ q)(j) = at(q.at(j))
  Permutation compose(const Permutation& q) const;

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<int> img_;
};

enum class Trivial { id, kappa, rho, kappa_rho };

inline constexpr Trivial kAllTrivial[4] = {Trivial::id, Trivial::kappa, Trivial::rho,
                                           Trivial::kappa_rho};

const char* name(Trivial g);

Permutation parse_one_line(std::string_view text);

Permutation act(const Permutation& p, Trivial g);

struct OrbitReport {
  Permutation canonical;
  std::vector<Permutation> orbit;  // sorted, distinct
  std::vector<Trivial> isotropy;
};

OrbitReport orbit_report(const Permutation& p);
Permutation canonical(const Permutation& p);
bool same_orbit(const Permutation& a, const Permutation& b);

// "id,kappa,rho,kappa_rho" style list.
std::string isotropy_str(const std::vector<Trivial>& iso);

}  // namespace sturm

#include "sylowlab/quotient.hpp"

#include <stdexcept>

namespace sylowlab {

QuotientHandle quotient_action(const Subgroup& ambient, const Subgroup& kernel) {
  if (!is_normal_in(kernel, ambient)) throw std::invalid_argument("quotient by a non-normal subgroup");
  const std::uint64_t index = ambient.order() / kernel.order();
  if (index > limits().quotient_degree_cap)
    throw CapExceeded("quotient index " + std::to_string(index) + " exceeds the quotient-degree cap of " +
                      std::to_string(limits().quotient_degree_cap));

  const Enumeration& e = ambient.universe();
  QuotientHandle q;
  q.source_ = ambient;
  q.kernel_ = kernel;
  q.coset_.assign(e.size(), 0);
  const auto ks = kernel.element_list();
  ElementSet covered = e.empty_set();
  ambient.elements().for_each([&](ElementId x) {
    if (covered.test(x)) return;
    std::size_t label = q.reps_.size();
    q.reps_.push_back(x);
    for (ElementId k : ks) {
      ElementId y = e.mul(k, x);
      covered.set(y);
      q.coset_[y] = label;
    }
  });

  std::vector<Permutation> gens;
  for (ElementId g : ambient.generators()) gens.push_back(q.project(g));
  q.image_ = PermGroup::build(q.reps_.size(), std::move(gens));
  return q;
}

Permutation QuotientHandle::project(ElementId g) const {
  const Enumeration& e = source_.universe();
  std::vector<Point> img(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) img[c] = static_cast<Point>(coset_[e.mul(reps_[c], g)]);
  return Permutation(std::move(img));
}

Subgroup QuotientHandle::preimage(const Subgroup& image_subgroup) const {
  const Enumeration& e = source_.universe();
  ElementSet set = e.empty_set();
  source_.elements().for_each([&](ElementId x) {
    if (image_subgroup.contains(project(x))) set.set(x);
  });
  return subgroup_from_set(source_.parent_ptr(), set);
}

GroupPtr as_group(const Subgroup& h, std::string name) {
  return PermGroup::build(h.parent().degree(), h.generator_perms(), std::move(name));
}

}  // namespace sylowlab

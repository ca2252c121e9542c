#pragma once

#include <vector>

#include "sylowlab/subgroup.hpp"

namespace sylowlab {

/// Faithful permutation image of source/kernel, acting on the right cosets
/// of the kernel.
class QuotientHandle {
 public:
  const Subgroup& source() const { return source_; }
  const Subgroup& kernel() const { return kernel_; }
  const GroupPtr& image() const { return image_; }
  std::size_t index() const { return reps_.size(); }

  /// Image of a source element as a permutation of the cosets.
  Permutation project(ElementId g) const;
  /// Coset label (0-based) of a source element.
  std::size_t coset_of(ElementId g) const { return coset_[g]; }
  /// Preimage of an image subgroup, as a subgroup of the source's parent.
  Subgroup preimage(const Subgroup& image_subgroup) const;

 private:
  friend QuotientHandle quotient_action(const Subgroup& ambient, const Subgroup& kernel);
  Subgroup source_;
  Subgroup kernel_;
  GroupPtr image_;
  std::vector<ElementId> reps_;
  std::vector<std::size_t> coset_;  // indexed by parent element id; valid on source elements
};

/// Throws std::invalid_argument if `kernel` is not normal in `ambient`, and
/// CapExceeded if the index is above limits().quotient_degree_cap.
QuotientHandle quotient_action(const Subgroup& ambient, const Subgroup& kernel);

/// The subgroup as a group in its own right (new parent, its own enumeration).
GroupPtr as_group(const Subgroup& h, std::string name = {});

}  // namespace sylowlab

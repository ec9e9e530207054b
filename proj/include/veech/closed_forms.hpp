#ifndef VEECH_CLOSED_FORMS_HPP
#define VEECH_CLOSED_FORMS_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace veech {

/// Minimal triangle and virtual-triangle areas over total area.
struct AreaResult
{
  double area_t = 0;
  double area_vt = 0;
};

struct H2Family
{
  long long D;
};
struct PrymH4Family
{
  long long D;
};
struct BouwMollerFamily
{
  int m, n;
};
struct RegularNgon
{
  int n; ///< even, >= 8
};
struct DoubleNgon
{
  int n; ///< odd, >= 5
};
enum class IsolatedId { ks_4_3_512, ks_9_3_49, ks_5_3_715 };
struct IsolatedSurface
{
  IsolatedId id;
};

using FamilySpec = std::variant<H2Family, PrymH4Family, BouwMollerFamily, RegularNgon, DoubleNgon, IsolatedSurface>;

/// Largest e < sqrt(D) with e = D mod 2. D must not be a square.
long long e_h2(long long D);
/// Largest e < sqrt(D) with e^2 = D mod 8. D must not be a square.
long long e_prym(long long D);

bool is_perfect_square(long long D);

// All of these throw std::domain_error outside the family's parameter range.
AreaResult h2_areas(long long D);
AreaResult prym_h4_areas(long long D);
AreaResult bouw_moller_areas(int m, int n);
AreaResult regular_ngon_areas(int n);
AreaResult double_ngon_areas(int n);
AreaResult isolated_areas(IsolatedId id);
AreaResult areas(const FamilySpec &spec);

std::string parameter_label(const FamilySpec &spec);

struct TableRow
{
  std::string param;
  double area_t = 0;
  double area_vt = 0;
  std::string status; ///< "ok", or the domain error
};

/// One row per spec, in the given order; invalid parameters become flagged
/// rows instead of aborting.
std::vector<TableRow> emit_family_table(const std::vector<FamilySpec> &specs);

/// CSV with header `param,area_t,area_vt,status`, values in %.17g.
void write_csv(std::ostream &out, const std::vector<TableRow> &rows);

struct Table1Row
{
  double area_vt;
  int surfaces;
  std::string description;
};

/// The non-arithmetic rows with Area_VT > 0.05, evaluated from the formulas.
std::vector<Table1Row> table1_rows();

} // namespace veech

#endif // VEECH_CLOSED_FORMS_HPP

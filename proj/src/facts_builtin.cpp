#include "subspace/engine.hpp"

namespace subspace {
namespace engine {

// curated external knowledge: exhaustive classifications and computer
// searches from the literature; columns are
// q n d k id parameter direction value source iso
const std::string& builtin_facts() {
  static const std::string text =
      "# constant dimension: classified exact values\n"
      "2\t6\t4\t2\tknown_exact\t-\texact\t21\tclassification\t131044\n"
      "2\t6\t4\t3\tknown_exact\t-\texact\t77\tclassification\t5\n"
      "2\t6\t6\t3\tknown_exact\t-\texact\t9\tclassification\t1\n"
      "2\t7\t6\t3\tknown_exact\t-\texact\t17\tclassification\t715\n"
      "2\t8\t6\t3\tknown_exact\t-\texact\t34\tclassification\t>=624\n"
      "2\t8\t6\t4\tknown_exact\t-\texact\t257\tclassification\t2\n"
      "2\t13\t4\t3\tknown_exact\t-\texact\t1597245\tclassification\t>=512\n"
      "3\t6\t6\t3\tknown_exact\t-\texact\t28\tclassification\t7\n"
      "# constant dimension: best known codes beyond the constructions\n"
      "2\t9\t4\t3\texternal\t-\tlower\t5986\tcomputer_search\t-\n"
      "2\t10\t6\t4\texternal\t-\tlower\t4173\tcomputer_search\t-\n"
      "# mixed dimension: best known codes beyond the constructions\n"
      "2\t6\t3\t-\texternal\t-\tlower\t108\tcomputer_search\t-\n"
      "# mixed dimension: classified exact values\n"
      "2\t1\t1\t-\tknown_exact\t-\texact\t2\tclassification\t1\n"
      "2\t2\t1\t-\tknown_exact\t-\texact\t5\tclassification\t1\n"
      "2\t3\t1\t-\tknown_exact\t-\texact\t16\tclassification\t1\n"
      "2\t4\t1\t-\tknown_exact\t-\texact\t67\tclassification\t1\n"
      "2\t5\t1\t-\tknown_exact\t-\texact\t374\tclassification\t1\n"
      "2\t6\t1\t-\tknown_exact\t-\texact\t2825\tclassification\t1\n"
      "2\t7\t1\t-\tknown_exact\t-\texact\t29212\tclassification\t1\n"
      "2\t8\t1\t-\tknown_exact\t-\texact\t417199\tclassification\t1\n"
      "2\t9\t1\t-\tknown_exact\t-\texact\t8283458\tclassification\t1\n"
      "2\t2\t2\t-\tknown_exact\t-\texact\t3\tclassification\t1\n"
      "2\t3\t2\t-\tknown_exact\t-\texact\t8\tclassification\t1\n"
      "2\t4\t2\t-\tknown_exact\t-\texact\t37\tclassification\t1\n"
      "2\t5\t2\t-\tknown_exact\t-\texact\t187\tclassification\t1\n"
      "2\t6\t2\t-\tknown_exact\t-\texact\t1521\tclassification\t1\n"
      "2\t7\t2\t-\tknown_exact\t-\texact\t14606\tclassification\t1\n"
      "2\t8\t2\t-\tknown_exact\t-\texact\t222379\tclassification\t1\n"
      "2\t9\t2\t-\tknown_exact\t-\texact\t4141729\tclassification\t1\n"
      "2\t3\t3\t-\tknown_exact\t-\texact\t2\tclassification\t2\n"
      "2\t4\t3\t-\tknown_exact\t-\texact\t5\tclassification\t3\n"
      "2\t5\t3\t-\tknown_exact\t-\texact\t18\tclassification\t24298\n"
      "2\t4\t4\t-\tknown_exact\t-\texact\t5\tclassification\t1\n"
      "2\t5\t4\t-\tknown_exact\t-\texact\t9\tclassification\t7\n"
      "2\t6\t4\t-\tknown_exact\t-\texact\t77\tclassification\t4\n"
      "2\t5\t5\t-\tknown_exact\t-\texact\t2\tclassification\t3\n"
      "2\t6\t5\t-\tknown_exact\t-\texact\t9\tclassification\t4\n"
      "2\t7\t5\t-\tknown_exact\t-\texact\t34\tclassification\t20\n"
      "2\t6\t6\t-\tknown_exact\t-\texact\t9\tclassification\t1\n"
      "2\t7\t6\t-\tknown_exact\t-\texact\t17\tclassification\t928\n"
      "2\t7\t7\t-\tknown_exact\t-\texact\t2\tclassification\t4\n"
      "2\t8\t8\t-\tknown_exact\t-\texact\t17\tclassification\t7\n"
      "2\t9\t9\t-\tknown_exact\t-\texact\t2\tclassification\t5\n"
      "3\t1\t1\t-\tknown_exact\t-\texact\t2\tclassification\t1\n"
      "3\t2\t1\t-\tknown_exact\t-\texact\t6\tclassification\t1\n"
      "3\t3\t1\t-\tknown_exact\t-\texact\t28\tclassification\t1\n"
      "3\t4\t1\t-\tknown_exact\t-\texact\t212\tclassification\t1\n"
      "3\t5\t1\t-\tknown_exact\t-\texact\t2664\tclassification\t1\n"
      "3\t6\t1\t-\tknown_exact\t-\texact\t56632\tclassification\t1\n"
      "3\t7\t1\t-\tknown_exact\t-\texact\t2052656\tclassification\t1\n"
      "3\t8\t1\t-\tknown_exact\t-\texact\t127902864\tclassification\t1\n"
      "3\t9\t1\t-\tknown_exact\t-\texact\t13721229088\tclassification\t1\n"
      "3\t2\t2\t-\tknown_exact\t-\texact\t4\tclassification\t1\n"
      "3\t3\t2\t-\tknown_exact\t-\texact\t14\tclassification\t1\n"
      "3\t4\t2\t-\tknown_exact\t-\texact\t132\tclassification\t1\n"
      "3\t5\t2\t-\tknown_exact\t-\texact\t1332\tclassification\t1\n"
      "3\t6\t2\t-\tknown_exact\t-\texact\t34608\tclassification\t1\n"
      "3\t7\t2\t-\tknown_exact\t-\texact\t1026328\tclassification\t1\n"
      "3\t8\t2\t-\tknown_exact\t-\texact\t77705744\tclassification\t1\n"
      "3\t9\t2\t-\tknown_exact\t-\texact\t6860614544\tclassification\t1\n"
      "3\t3\t3\t-\tknown_exact\t-\texact\t2\tclassification\t2\n"
      "3\t4\t4\t-\tknown_exact\t-\texact\t10\tclassification\t2\n"
      "3\t5\t5\t-\tknown_exact\t-\texact\t2\tclassification\t3\n"
      "3\t6\t6\t-\tknown_exact\t-\texact\t28\tclassification\t7\n"
      "3\t7\t7\t-\tknown_exact\t-\texact\t2\tclassification\t4\n"
      "3\t9\t9\t-\tknown_exact\t-\texact\t2\tclassification\t5\n"
      "4\t1\t1\t-\tknown_exact\t-\texact\t2\tclassification\t1\n"
      "4\t2\t1\t-\tknown_exact\t-\texact\t7\tclassification\t1\n"
      "4\t3\t1\t-\tknown_exact\t-\texact\t44\tclassification\t1\n"
      "4\t4\t1\t-\tknown_exact\t-\texact\t529\tclassification\t1\n"
      "4\t5\t1\t-\tknown_exact\t-\texact\t12278\tclassification\t1\n"
      "4\t6\t1\t-\tknown_exact\t-\texact\t565723\tclassification\t1\n"
      "4\t7\t1\t-\tknown_exact\t-\texact\t51409856\tclassification\t1\n"
      "4\t8\t1\t-\tknown_exact\t-\texact\t9371059621\tclassification\t1\n"
      "4\t2\t2\t-\tknown_exact\t-\texact\t5\tclassification\t1\n"
      "4\t3\t2\t-\tknown_exact\t-\texact\t22\tclassification\t1\n"
      "4\t4\t2\t-\tknown_exact\t-\texact\t359\tclassification\t1\n"
      "4\t5\t2\t-\tknown_exact\t-\texact\t6139\tclassification\t1\n"
      "4\t6\t2\t-\tknown_exact\t-\texact\t379535\tclassification\t1\n"
      "4\t7\t2\t-\tknown_exact\t-\texact\t25704928\tclassification\t1\n"
      "4\t8\t2\t-\tknown_exact\t-\texact\t6269331761\tclassification\t1\n"
      "4\t3\t3\t-\tknown_exact\t-\texact\t2\tclassification\t2\n"
      "4\t4\t4\t-\tknown_exact\t-\texact\t17\tclassification\t3\n"
      "4\t5\t5\t-\tknown_exact\t-\texact\t2\tclassification\t3\n"
      "4\t7\t7\t-\tknown_exact\t-\texact\t2\tclassification\t4\n";
  return text;
}

}  // namespace engine
}  // namespace subspace

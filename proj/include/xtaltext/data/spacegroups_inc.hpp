// Generated by scripts/embed_data.py from data/spacegroups.txt. Do not edit.
#ifndef XTALTEXT_DATA_SPACEGROUPS_INC_HPP
#define XTALTEXT_DATA_SPACEGROUPS_INC_HPP

namespace xtal::data {

inline constexpr const char* kSpaceGroupTableText = R"XTALDATA(# Space-group symmetry operations, one block per group:
#   #SG <number> <hm_symbol> <op_count>
# followed by op_count lines in x,y,z triplet notation, blank-line separated.
# Standard settings (unique axis b, origin choice 2, hexagonal axes for
# rhombohedral groups), expanded from the Hall notation of the corresponding
# settings in the International Tables / spglib convention.

#SG 1 P1 1
x,y,z

#SG 2 P-1 2
x,y,z
-x,-y,-z

#SG 3 P2 2
x,y,z
-x,y,-z

#SG 4 P2_1 2
x,y,z
-x,y+1/2,-z

#SG 5 C2 4
x,y,z
-x+1/2,y+1/2,-z
-x,y,-z
x+1/2,y+1/2,z

#SG 6 Pm 2
x,y,z
x,-y,z

#SG 7 Pc 2
x,y,z
x,-y,z+1/2

#SG 8 Cm 4
x,y,z
x+1/2,-y+1/2,z
x+1/2,y+1/2,z
x,-y,z

#SG 9 Cc 4
x,y,z
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,z
x,-y,z+1/2

#SG 10 P2/m 4
x,y,z
-x,-y,-z
-x,y,-z
x,-y,z

#SG 11 P2_1/m 4
x,y,z
-x,-y,-z
-x,y+1/2,-z
x,-y+1/2,z

#SG 12 C2/m 8
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,y+1/2,-z
-x,-y,-z
-x,y,-z
x+1/2,-y+1/2,z
x+1/2,y+1/2,z
x,-y,z

#SG 13 P2/c 4
x,y,z
-x,-y,-z
-x,y,-z+1/2
x,-y,z+1/2

#SG 14 P2_1/c 4
x,y,z
-x,-y,-z
-x,y+1/2,-z+1/2
x,-y+1/2,z+1/2

#SG 15 C2/c 8
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,y+1/2,-z+1/2
-x,-y,-z
-x,y,-z+1/2
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,z
x,-y,z+1/2

#SG 16 P222 4
x,y,z
-x,-y,z
-x,y,-z
x,-y,-z

#SG 17 P222_1 4
x,y,z
-x,-y,z+1/2
-x,y,-z+1/2
x,-y,-z

#SG 18 P2_12_12 4
x,y,z
-x+1/2,y+1/2,-z
-x,-y,z
x+1/2,-y+1/2,-z

#SG 19 P2_12_12_1 4
x,y,z
-x+1/2,-y,z+1/2
-x,y+1/2,-z+1/2
x+1/2,-y+1/2,-z

#SG 20 C222_1 8
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,-z+1/2
-x,-y,z+1/2
-x,y,-z+1/2
x+1/2,-y+1/2,-z
x+1/2,y+1/2,z
x,-y,-z

#SG 21 C222 8
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y+1/2,-z
-x,-y,z
-x,y,-z
x+1/2,-y+1/2,-z
x+1/2,y+1/2,z
x,-y,-z

#SG 22 F222 16
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,-z
-x+1/2,y,-z+1/2
-x,-y+1/2,z+1/2
-x,-y,z
-x,y+1/2,-z+1/2
-x,y,-z
x+1/2,-y+1/2,-z
x+1/2,-y,-z+1/2
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x,-y+1/2,-z+1/2
x,-y,-z
x,y+1/2,z+1/2

#SG 23 I222 8
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,-z+1/2
-x,-y,z
-x,y,-z
x+1/2,-y+1/2,-z+1/2
x+1/2,y+1/2,z+1/2
x,-y,-z

#SG 24 I2_12_12_1 8
x,y,z
-x+1/2,-y,z+1/2
-x+1/2,y,-z
-x,-y+1/2,z
-x,y+1/2,-z+1/2
x+1/2,-y+1/2,-z
x+1/2,y+1/2,z+1/2
x,-y,-z+1/2

#SG 25 Pmm2 4
x,y,z
-x,-y,z
-x,y,z
x,-y,z

#SG 26 Pmc2_1 4
x,y,z
-x,-y,z+1/2
-x,y,z
x,-y,z+1/2

#SG 27 Pcc2 4
x,y,z
-x,-y,z
-x,y,z+1/2
x,-y,z+1/2

#SG 28 Pma2 4
x,y,z
-x+1/2,y,z
-x,-y,z
x+1/2,-y,z

#SG 29 Pca2_1 4
x,y,z
-x+1/2,y,z+1/2
-x,-y,z+1/2
x+1/2,-y,z

#SG 30 Pnc2 4
x,y,z
-x,-y,z
-x,y+1/2,z+1/2
x,-y+1/2,z+1/2

#SG 31 Pmn2_1 4
x,y,z
-x+1/2,-y,z+1/2
-x,y,z
x+1/2,-y,z+1/2

#SG 32 Pba2 4
x,y,z
-x+1/2,y+1/2,z
-x,-y,z
x+1/2,-y+1/2,z

#SG 33 Pna2_1 4
x,y,z
-x+1/2,y+1/2,z+1/2
-x,-y,z+1/2
x+1/2,-y+1/2,z

#SG 34 Pnn2 4
x,y,z
-x+1/2,y+1/2,z+1/2
-x,-y,z
x+1/2,-y+1/2,z+1/2

#SG 35 Cmm2 8
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y+1/2,z
-x,-y,z
-x,y,z
x+1/2,-y+1/2,z
x+1/2,y+1/2,z
x,-y,z

#SG 36 Cmc2_1 8
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,z
-x,-y,z+1/2
-x,y,z
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,z
x,-y,z+1/2

#SG 37 Ccc2 8
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y+1/2,z+1/2
-x,-y,z
-x,y,z+1/2
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,z
x,-y,z+1/2

#SG 38 Amm2 8
x,y,z
-x,-y+1/2,z+1/2
-x,-y,z
-x,y+1/2,z+1/2
-x,y,z
x,-y+1/2,z+1/2
x,-y,z
x,y+1/2,z+1/2

#SG 39 Aem2 8
x,y,z
-x,-y+1/2,z+1/2
-x,-y,z
-x,y+1/2,z
-x,y,z+1/2
x,-y+1/2,z
x,-y,z+1/2
x,y+1/2,z+1/2

#SG 40 Ama2 8
x,y,z
-x+1/2,y+1/2,z+1/2
-x+1/2,y,z
-x,-y+1/2,z+1/2
-x,-y,z
x+1/2,-y+1/2,z+1/2
x+1/2,-y,z
x,y+1/2,z+1/2

#SG 41 Aea2 8
x,y,z
-x+1/2,y+1/2,z
-x+1/2,y,z+1/2
-x,-y+1/2,z+1/2
-x,-y,z
x+1/2,-y+1/2,z
x+1/2,-y,z+1/2
x,y+1/2,z+1/2

#SG 42 Fmm2 16
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,z
-x+1/2,y,z+1/2
-x,-y+1/2,z+1/2
-x,-y,z
-x,y+1/2,z+1/2
-x,y,z
x+1/2,-y+1/2,z
x+1/2,-y,z+1/2
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x,-y+1/2,z+1/2
x,-y,z
x,y+1/2,z+1/2

#SG 43 Fdd2 16
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,-y,z+1/2
-x+1/4,y+1/4,z+1/4
-x+1/4,y+3/4,z+3/4
-x+3/4,y+1/4,z+3/4
-x+3/4,y+3/4,z+1/4
-x,-y+1/2,z+1/2
-x,-y,z
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x+1/4,-y+1/4,z+1/4
x+1/4,-y+3/4,z+3/4
x+3/4,-y+1/4,z+3/4
x+3/4,-y+3/4,z+1/4
x,y+1/2,z+1/2

#SG 44 Imm2 8
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,z
-x,y,z
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,z+1/2
x,-y,z

#SG 45 Iba2 8
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,z
-x,-y,z
-x,y,z+1/2
x+1/2,-y+1/2,z
x+1/2,y+1/2,z+1/2
x,-y,z+1/2

#SG 46 Ima2 8
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y,z
-x,-y,z
-x,y+1/2,z+1/2
x+1/2,-y,z
x+1/2,y+1/2,z+1/2
x,-y+1/2,z+1/2

#SG 47 Pmmm 8
x,y,z
-x,-y,-z
-x,-y,z
-x,y,-z
-x,y,z
x,-y,-z
x,-y,z
x,y,-z

#SG 48 Pnnn 8
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,-z+1/2
-x,-y,-z
-x,y+1/2,z+1/2
x+1/2,-y,z+1/2
x+1/2,y+1/2,-z
x,-y+1/2,-z+1/2

#SG 49 Pccm 8
x,y,z
-x,-y,-z
-x,-y,z
-x,y,-z+1/2
-x,y,z+1/2
x,-y,-z+1/2
x,-y,z+1/2
x,y,-z

#SG 50 Pban 8
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,-z
-x,-y,-z
-x,y+1/2,z
x+1/2,-y,z
x+1/2,y+1/2,-z
x,-y+1/2,-z

#SG 51 Pmma 8
x,y,z
-x+1/2,-y,z
-x+1/2,y,z
-x,-y,-z
-x,y,-z
x+1/2,-y,-z
x+1/2,y,-z
x,-y,z

#SG 52 Pnna 8
x,y,z
-x+1/2,-y,z
-x+1/2,y+1/2,-z+1/2
-x,-y,-z
-x,y+1/2,z+1/2
x+1/2,-y+1/2,z+1/2
x+1/2,y,-z
x,-y+1/2,-z+1/2

#SG 53 Pmna 8
x,y,z
-x+1/2,-y,z+1/2
-x+1/2,y,-z+1/2
-x,-y,-z
-x,y,z
x+1/2,-y,z+1/2
x+1/2,y,-z+1/2
x,-y,-z

#SG 54 Pcca 8
x,y,z
-x+1/2,-y,z
-x+1/2,y,z+1/2
-x,-y,-z
-x,y,-z+1/2
x+1/2,-y,-z+1/2
x+1/2,y,-z
x,-y,z+1/2

#SG 55 Pbam 8
x,y,z
-x+1/2,y+1/2,-z
-x+1/2,y+1/2,z
-x,-y,-z
-x,-y,z
x+1/2,-y+1/2,-z
x+1/2,-y+1/2,z
x,y,-z

#SG 56 Pccn 8
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,z+1/2
-x,-y,-z
-x,y+1/2,-z+1/2
x+1/2,-y,-z+1/2
x+1/2,y+1/2,-z
x,-y+1/2,z+1/2

#SG 57 Pbcm 8
x,y,z
-x,-y,-z
-x,-y,z+1/2
-x,y+1/2,-z+1/2
-x,y+1/2,z
x,-y+1/2,-z
x,-y+1/2,z+1/2
x,y,-z+1/2

#SG 58 Pnnm 8
x,y,z
-x+1/2,y+1/2,-z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,-z
-x,-y,z
x+1/2,-y+1/2,-z+1/2
x+1/2,-y+1/2,z+1/2
x,y,-z

#SG 59 Pmmn 8
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,z
-x,-y,-z
-x,y+1/2,-z
x+1/2,-y,-z
x+1/2,y+1/2,-z
x,-y+1/2,z

#SG 60 Pbcn 8
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,z
-x,-y,-z
-x,y,-z+1/2
x+1/2,-y+1/2,-z
x+1/2,y+1/2,-z+1/2
x,-y,z+1/2

#SG 61 Pbca 8
x,y,z
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,z
-x,-y,-z
-x,y+1/2,-z+1/2
x+1/2,-y+1/2,-z
x+1/2,y,-z+1/2
x,-y+1/2,z+1/2

#SG 62 Pnma 8
x,y,z
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,-z
-x,y+1/2,-z
x+1/2,-y+1/2,-z+1/2
x+1/2,y,-z+1/2
x,-y+1/2,z

#SG 63 Cmcm 16
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,-z+1/2
-x+1/2,y+1/2,z
-x,-y,-z
-x,-y,z+1/2
-x,y,-z+1/2
-x,y,z
x+1/2,-y+1/2,-z
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,-z+1/2
x+1/2,y+1/2,z
x,-y,-z
x,-y,z+1/2
x,y,-z+1/2

#SG 64 Cmce 16
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,z
-x+1/2,y,-z+1/2
-x,-y+1/2,z+1/2
-x,-y,-z
-x,y+1/2,-z+1/2
-x,y,z
x+1/2,-y+1/2,-z
x+1/2,-y,z+1/2
x+1/2,y+1/2,z
x+1/2,y,-z+1/2
x,-y+1/2,z+1/2
x,-y,-z
x,y+1/2,-z+1/2

#SG 65 Cmmm 16
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y+1/2,z
-x+1/2,y+1/2,-z
-x+1/2,y+1/2,z
-x,-y,-z
-x,-y,z
-x,y,-z
-x,y,z
x+1/2,-y+1/2,-z
x+1/2,-y+1/2,z
x+1/2,y+1/2,-z
x+1/2,y+1/2,z
x,-y,-z
x,-y,z
x,y,-z

#SG 66 Cccm 16
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y+1/2,z
-x+1/2,y+1/2,-z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,-z
-x,-y,z
-x,y,-z+1/2
-x,y,z+1/2
x+1/2,-y+1/2,-z+1/2
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,-z
x+1/2,y+1/2,z
x,-y,-z+1/2
x,-y,z+1/2
x,y,-z

#SG 67 Cmme 16
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y,z
-x+1/2,y+1/2,z
-x+1/2,y,-z
-x,-y+1/2,z
-x,-y,-z
-x,y+1/2,-z
-x,y,z
x+1/2,-y+1/2,-z
x+1/2,-y,z
x+1/2,y+1/2,z
x+1/2,y,-z
x,-y+1/2,z
x,-y,-z
x,y+1/2,-z

#SG 68 Ccce 16
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y,z
-x+1/2,y+1/2,-z+1/2
-x+1/2,y,z+1/2
-x,-y+1/2,z
-x,-y,-z
-x,y+1/2,z+1/2
-x,y,-z+1/2
x+1/2,-y+1/2,z+1/2
x+1/2,-y,-z+1/2
x+1/2,y+1/2,z
x+1/2,y,-z
x,-y+1/2,-z+1/2
x,-y,z+1/2
x,y+1/2,-z

#SG 69 Fmmm 32
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y+1/2,z
-x+1/2,-y,-z+1/2
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,-z
-x+1/2,y+1/2,z
-x+1/2,y,-z+1/2
-x+1/2,y,z+1/2
-x,-y+1/2,-z+1/2
-x,-y+1/2,z+1/2
-x,-y,-z
-x,-y,z
-x,y+1/2,-z+1/2
-x,y+1/2,z+1/2
-x,y,-z
-x,y,z
x+1/2,-y+1/2,-z
x+1/2,-y+1/2,z
x+1/2,-y,-z+1/2
x+1/2,-y,z+1/2
x+1/2,y+1/2,-z
x+1/2,y+1/2,z
x+1/2,y,-z+1/2
x+1/2,y,z+1/2
x,-y+1/2,-z+1/2
x,-y+1/2,z+1/2
x,-y,-z
x,-y,z
x,y+1/2,-z+1/2
x,y+1/2,z+1/2
x,y,-z

#SG 70 Fddd 32
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y,-z+1/2
-x+1/2,y+1/4,z+3/4
-x+1/2,y+3/4,z+1/4
-x+1/4,-y+1/4,z
-x+1/4,-y+3/4,z+1/2
-x+1/4,y+1/2,-z+3/4
-x+1/4,y,-z+1/4
-x+3/4,-y+1/4,z+1/2
-x+3/4,-y+3/4,z
-x+3/4,y+1/2,-z+1/4
-x+3/4,y,-z+3/4
-x,-y+1/2,-z+1/2
-x,-y,-z
-x,y+1/4,z+1/4
-x,y+3/4,z+3/4
x+1/2,-y+1/4,-z+3/4
x+1/2,-y+3/4,-z+1/4
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x+1/4,-y+1/2,z+3/4
x+1/4,-y,z+1/4
x+1/4,y+1/4,-z
x+1/4,y+3/4,-z+1/2
x+3/4,-y+1/2,z+1/4
x+3/4,-y,z+3/4
x+3/4,y+1/4,-z+1/2
x+3/4,y+3/4,-z
x,-y+1/4,-z+1/4
x,-y+3/4,-z+3/4
x,y+1/2,z+1/2

#SG 71 Immm 16
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,-z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,-z
-x,-y,z
-x,y,-z
-x,y,z
x+1/2,-y+1/2,-z+1/2
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,-z+1/2
x+1/2,y+1/2,z+1/2
x,-y,-z
x,-y,z
x,y,-z

#SG 72 Ibam 16
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,-z
-x+1/2,y+1/2,z
-x,-y,-z
-x,-y,z
-x,y,-z+1/2
-x,y,z+1/2
x+1/2,-y+1/2,-z
x+1/2,-y+1/2,z
x+1/2,y+1/2,-z+1/2
x+1/2,y+1/2,z+1/2
x,-y,-z+1/2
x,-y,z+1/2
x,y,-z

#SG 73 Ibca 16
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,z
-x+1/2,y,-z
-x,-y+1/2,z
-x,-y,-z
-x,y+1/2,-z+1/2
-x,y,z+1/2
x+1/2,-y+1/2,-z
x+1/2,-y,z
x+1/2,y+1/2,z+1/2
x+1/2,y,-z+1/2
x,-y+1/2,z+1/2
x,-y,-z+1/2
x,y+1/2,-z

#SG 74 Imma 16
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,z+1/2
-x+1/2,y,-z+1/2
-x,-y+1/2,z
-x,-y,-z
-x,y+1/2,-z
-x,y,z
x+1/2,-y+1/2,-z+1/2
x+1/2,-y,z+1/2
x+1/2,y+1/2,z+1/2
x+1/2,y,-z+1/2
x,-y+1/2,z
x,-y,-z
x,y+1/2,-z

#SG 75 P4 4
x,y,z
-x,-y,z
-y,x,z
y,-x,z

#SG 76 P4_1 4
x,y,z
-x,-y,z+1/2
-y,x,z+1/4
y,-x,z+3/4

#SG 77 P4_2 4
x,y,z
-x,-y,z
-y,x,z+1/2
y,-x,z+1/2

#SG 78 P4_3 4
x,y,z
-x,-y,z+1/2
-y,x,z+3/4
y,-x,z+1/4

#SG 79 I4 8
x,y,z
-x+1/2,-y+1/2,z+1/2
-x,-y,z
-y+1/2,x+1/2,z+1/2
-y,x,z
x+1/2,y+1/2,z+1/2
y+1/2,-x+1/2,z+1/2
y,-x,z

#SG 80 I4_1 8
x,y,z
-x+1/2,-y+1/2,z+1/2
-x,-y,z
-y+1/2,x,z+3/4
-y,x+1/2,z+1/4
x+1/2,y+1/2,z+1/2
y+1/2,-x,z+3/4
y,-x+1/2,z+1/4

#SG 81 P-4 4
x,y,z
-x,-y,z
-y,x,-z
y,-x,-z

#SG 82 I-4 8
x,y,z
-x+1/2,-y+1/2,z+1/2
-x,-y,z
-y+1/2,x+1/2,-z+1/2
-y,x,-z
x+1/2,y+1/2,z+1/2
y+1/2,-x+1/2,-z+1/2
y,-x,-z

#SG 83 P4/m 8
x,y,z
-x,-y,-z
-x,-y,z
-y,x,-z
-y,x,z
x,y,-z
y,-x,-z
y,-x,z

#SG 84 P4_2/m 8
x,y,z
-x,-y,-z
-x,-y,z
-y,x,-z+1/2
-y,x,z+1/2
x,y,-z
y,-x,-z+1/2
y,-x,z+1/2

#SG 85 P4/n 8
x,y,z
-x+1/2,-y+1/2,z
-x,-y,-z
-y+1/2,x,z
-y,x+1/2,-z
x+1/2,y+1/2,-z
y+1/2,-x,-z
y,-x+1/2,z

#SG 86 P4_2/n 8
x,y,z
-x+1/2,-y+1/2,z
-x,-y,-z
-y+1/2,x,-z+1/2
-y,x+1/2,z+1/2
x+1/2,y+1/2,-z
y+1/2,-x,z+1/2
y,-x+1/2,-z+1/2

#SG 87 I4/m 16
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y+1/2,z+1/2
-x,-y,-z
-x,-y,z
-y+1/2,x+1/2,-z+1/2
-y+1/2,x+1/2,z+1/2
-y,x,-z
-y,x,z
x+1/2,y+1/2,-z+1/2
x+1/2,y+1/2,z+1/2
x,y,-z
y+1/2,-x+1/2,-z+1/2
y+1/2,-x+1/2,z+1/2
y,-x,-z
y,-x,z

#SG 88 I4_1/a 16
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y,z+1/2
-x,-y+1/2,z
-x,-y,-z
-y+1/4,x+1/4,-z+1/4
-y+1/4,x+3/4,z+3/4
-y+3/4,x+1/4,z+1/4
-y+3/4,x+3/4,-z+3/4
x+1/2,y+1/2,z+1/2
x+1/2,y,-z+1/2
x,y+1/2,-z
y+1/4,-x+1/4,z+1/4
y+1/4,-x+3/4,-z+3/4
y+3/4,-x+1/4,-z+1/4
y+3/4,-x+3/4,z+3/4

#SG 89 P422 8
x,y,z
-x,-y,z
-x,y,-z
-y,-x,-z
-y,x,z
x,-y,-z
y,-x,z
y,x,-z

#SG 90 P42_12 8
x,y,z
-x+1/2,y+1/2,-z
-x,-y,z
-y+1/2,x+1/2,z
-y,-x,-z
x+1/2,-y+1/2,-z
y+1/2,-x+1/2,z
y,x,-z

#SG 91 P4_122 8
x,y,z
-x,-y,z+1/2
-x,y,-z
-y,-x,-z+1/4
-y,x,z+1/4
x,-y,-z+1/2
y,-x,z+3/4
y,x,-z+3/4

#SG 92 P4_12_12 8
x,y,z
-x+1/2,y+1/2,-z+1/4
-x,-y,z+1/2
-y+1/2,x+1/2,z+1/4
-y,-x,-z+1/2
x+1/2,-y+1/2,-z+3/4
y+1/2,-x+1/2,z+3/4
y,x,-z

#SG 93 P4_222 8
x,y,z
-x,-y,z
-x,y,-z
-y,-x,-z+1/2
-y,x,z+1/2
x,-y,-z
y,-x,z+1/2
y,x,-z+1/2

#SG 94 P4_22_12 8
x,y,z
-x+1/2,y+1/2,-z+1/2
-x,-y,z
-y+1/2,x+1/2,z+1/2
-y,-x,-z
x+1/2,-y+1/2,-z+1/2
y+1/2,-x+1/2,z+1/2
y,x,-z

#SG 95 P4_322 8
x,y,z
-x,-y,z+1/2
-x,y,-z
-y,-x,-z+3/4
-y,x,z+3/4
x,-y,-z+1/2
y,-x,z+1/4
y,x,-z+1/4

#SG 96 P4_32_12 8
x,y,z
-x+1/2,y+1/2,-z+3/4
-x,-y,z+1/2
-y+1/2,x+1/2,z+3/4
-y,-x,-z+1/2
x+1/2,-y+1/2,-z+1/4
y+1/2,-x+1/2,z+1/4
y,x,-z

#SG 97 I422 16
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,-z+1/2
-x,-y,z
-x,y,-z
-y+1/2,-x+1/2,-z+1/2
-y+1/2,x+1/2,z+1/2
-y,-x,-z
-y,x,z
x+1/2,-y+1/2,-z+1/2
x+1/2,y+1/2,z+1/2
x,-y,-z
y+1/2,-x+1/2,z+1/2
y+1/2,x+1/2,-z+1/2
y,-x,z
y,x,-z

#SG 98 I4_122 16
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y,-z+3/4
-x,-y,z
-x,y+1/2,-z+1/4
-y+1/2,-x+1/2,-z+1/2
-y+1/2,x,z+3/4
-y,-x,-z
-y,x+1/2,z+1/4
x+1/2,-y,-z+3/4
x+1/2,y+1/2,z+1/2
x,-y+1/2,-z+1/4
y+1/2,-x,z+3/4
y+1/2,x+1/2,-z+1/2
y,-x+1/2,z+1/4
y,x,-z

#SG 99 P4mm 8
x,y,z
-x,-y,z
-x,y,z
-y,-x,z
-y,x,z
x,-y,z
y,-x,z
y,x,z

#SG 100 P4bm 8
x,y,z
-x+1/2,y+1/2,z
-x,-y,z
-y+1/2,-x+1/2,z
-y,x,z
x+1/2,-y+1/2,z
y+1/2,x+1/2,z
y,-x,z

#SG 101 P4_2cm 8
x,y,z
-x,-y,z
-x,y,z+1/2
-y,-x,z
-y,x,z+1/2
x,-y,z+1/2
y,-x,z+1/2
y,x,z

#SG 102 P4_2nm 8
x,y,z
-x+1/2,y+1/2,z+1/2
-x,-y,z
-y+1/2,x+1/2,z+1/2
-y,-x,z
x+1/2,-y+1/2,z+1/2
y+1/2,-x+1/2,z+1/2
y,x,z

#SG 103 P4cc 8
x,y,z
-x,-y,z
-x,y,z+1/2
-y,-x,z+1/2
-y,x,z
x,-y,z+1/2
y,-x,z
y,x,z+1/2

#SG 104 P4nc 8
x,y,z
-x+1/2,y+1/2,z+1/2
-x,-y,z
-y+1/2,-x+1/2,z+1/2
-y,x,z
x+1/2,-y+1/2,z+1/2
y+1/2,x+1/2,z+1/2
y,-x,z

#SG 105 P4_2mc 8
x,y,z
-x,-y,z
-x,y,z
-y,-x,z+1/2
-y,x,z+1/2
x,-y,z
y,-x,z+1/2
y,x,z+1/2

#SG 106 P4_2bc 8
x,y,z
-x+1/2,y+1/2,z
-x,-y,z
-y+1/2,-x+1/2,z+1/2
-y,x,z+1/2
x+1/2,-y+1/2,z
y+1/2,x+1/2,z+1/2
y,-x,z+1/2

#SG 107 I4mm 16
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,z
-x,y,z
-y+1/2,-x+1/2,z+1/2
-y+1/2,x+1/2,z+1/2
-y,-x,z
-y,x,z
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,z+1/2
x,-y,z
y+1/2,-x+1/2,z+1/2
y+1/2,x+1/2,z+1/2
y,-x,z
y,x,z

#SG 108 I4cm 16
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,z
-x,-y,z
-x,y,z+1/2
-y+1/2,-x+1/2,z
-y+1/2,x+1/2,z+1/2
-y,-x,z+1/2
-y,x,z
x+1/2,-y+1/2,z
x+1/2,y+1/2,z+1/2
x,-y,z+1/2
y+1/2,-x+1/2,z+1/2
y+1/2,x+1/2,z
y,-x,z
y,x,z+1/2

#SG 109 I4_1md 16
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,z
-x,y,z
-y+1/2,-x,z+3/4
-y+1/2,x,z+3/4
-y,-x+1/2,z+1/4
-y,x+1/2,z+1/4
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,z+1/2
x,-y,z
y+1/2,-x,z+3/4
y+1/2,x,z+3/4
y,-x+1/2,z+1/4
y,x+1/2,z+1/4

#SG 110 I4_1cd 16
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,z
-x,-y,z
-x,y,z+1/2
-y+1/2,-x,z+1/4
-y+1/2,x,z+3/4
-y,-x+1/2,z+3/4
-y,x+1/2,z+1/4
x+1/2,-y+1/2,z
x+1/2,y+1/2,z+1/2
x,-y,z+1/2
y+1/2,-x,z+3/4
y+1/2,x,z+1/4
y,-x+1/2,z+1/4
y,x+1/2,z+3/4

#SG 111 P-42m 8
x,y,z
-x,-y,z
-x,y,-z
-y,-x,z
-y,x,-z
x,-y,-z
y,-x,-z
y,x,z

#SG 112 P-42c 8
x,y,z
-x,-y,z
-x,y,-z+1/2
-y,-x,z+1/2
-y,x,-z
x,-y,-z+1/2
y,-x,-z
y,x,z+1/2

#SG 113 P-42_1m 8
x,y,z
-x+1/2,y+1/2,-z
-x,-y,z
-y+1/2,-x+1/2,z
-y,x,-z
x+1/2,-y+1/2,-z
y+1/2,x+1/2,z
y,-x,-z

#SG 114 P-42_1c 8
x,y,z
-x+1/2,y+1/2,-z+1/2
-x,-y,z
-y+1/2,-x+1/2,z+1/2
-y,x,-z
x+1/2,-y+1/2,-z+1/2
y+1/2,x+1/2,z+1/2
y,-x,-z

#SG 115 P-4m2 8
x,y,z
-x,-y,z
-x,y,z
-y,-x,-z
-y,x,-z
x,-y,z
y,-x,-z
y,x,-z

#SG 116 P-4c2 8
x,y,z
-x,-y,z
-x,y,z+1/2
-y,-x,-z+1/2
-y,x,-z
x,-y,z+1/2
y,-x,-z
y,x,-z+1/2

#SG 117 P-4b2 8
x,y,z
-x+1/2,y+1/2,z
-x,-y,z
-y+1/2,-x+1/2,-z
-y,x,-z
x+1/2,-y+1/2,z
y+1/2,x+1/2,-z
y,-x,-z

#SG 118 P-4n2 8
x,y,z
-x+1/2,y+1/2,z+1/2
-x,-y,z
-y+1/2,-x+1/2,-z+1/2
-y,x,-z
x+1/2,-y+1/2,z+1/2
y+1/2,x+1/2,-z+1/2
y,-x,-z

#SG 119 I-4m2 16
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,z
-x,y,z
-y+1/2,-x+1/2,-z+1/2
-y+1/2,x+1/2,-z+1/2
-y,-x,-z
-y,x,-z
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,z+1/2
x,-y,z
y+1/2,-x+1/2,-z+1/2
y+1/2,x+1/2,-z+1/2
y,-x,-z
y,x,-z

#SG 120 I-4c2 16
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,z
-x,-y,z
-x,y,z+1/2
-y+1/2,-x+1/2,-z
-y+1/2,x+1/2,-z+1/2
-y,-x,-z+1/2
-y,x,-z
x+1/2,-y+1/2,z
x+1/2,y+1/2,z+1/2
x,-y,z+1/2
y+1/2,-x+1/2,-z+1/2
y+1/2,x+1/2,-z
y,-x,-z
y,x,-z+1/2

#SG 121 I-42m 16
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,-z+1/2
-x,-y,z
-x,y,-z
-y+1/2,-x+1/2,z+1/2
-y+1/2,x+1/2,-z+1/2
-y,-x,z
-y,x,-z
x+1/2,-y+1/2,-z+1/2
x+1/2,y+1/2,z+1/2
x,-y,-z
y+1/2,-x+1/2,-z+1/2
y+1/2,x+1/2,z+1/2
y,-x,-z
y,x,z

#SG 122 I-42d 16
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y,-z+3/4
-x,-y,z
-x,y+1/2,-z+1/4
-y+1/2,-x,z+3/4
-y+1/2,x+1/2,-z+1/2
-y,-x+1/2,z+1/4
-y,x,-z
x+1/2,-y,-z+3/4
x+1/2,y+1/2,z+1/2
x,-y+1/2,-z+1/4
y+1/2,-x+1/2,-z+1/2
y+1/2,x,z+3/4
y,-x,-z
y,x+1/2,z+1/4

#SG 123 P4/mmm 16
x,y,z
-x,-y,-z
-x,-y,z
-x,y,-z
-x,y,z
-y,-x,-z
-y,-x,z
-y,x,-z
-y,x,z
x,-y,-z
x,-y,z
x,y,-z
y,-x,-z
y,-x,z
y,x,-z
y,x,z

#SG 124 P4/mcc 16
x,y,z
-x,-y,-z
-x,-y,z
-x,y,-z+1/2
-x,y,z+1/2
-y,-x,-z+1/2
-y,-x,z+1/2
-y,x,-z
-y,x,z
x,-y,-z+1/2
x,-y,z+1/2
x,y,-z
y,-x,-z
y,-x,z
y,x,-z+1/2
y,x,z+1/2

#SG 125 P4/nbm 16
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,-z
-x,-y,-z
-x,y+1/2,z
-y+1/2,-x+1/2,-z
-y+1/2,x,z
-y,-x,z
-y,x+1/2,-z
x+1/2,-y,z
x+1/2,y+1/2,-z
x,-y+1/2,-z
y+1/2,-x,-z
y+1/2,x+1/2,z
y,-x+1/2,z
y,x,-z

#SG 126 P4/nnc 16
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,-z+1/2
-x,-y,-z
-x,y+1/2,z+1/2
-y+1/2,-x+1/2,-z+1/2
-y+1/2,x,z
-y,-x,z+1/2
-y,x+1/2,-z
x+1/2,-y,z+1/2
x+1/2,y+1/2,-z
x,-y+1/2,-z+1/2
y+1/2,-x,-z
y+1/2,x+1/2,z+1/2
y,-x+1/2,z
y,x,-z+1/2

#SG 127 P4/mbm 16
x,y,z
-x+1/2,y+1/2,-z
-x+1/2,y+1/2,z
-x,-y,-z
-x,-y,z
-y+1/2,-x+1/2,-z
-y+1/2,-x+1/2,z
-y,x,-z
-y,x,z
x+1/2,-y+1/2,-z
x+1/2,-y+1/2,z
x,y,-z
y+1/2,x+1/2,-z
y+1/2,x+1/2,z
y,-x,-z
y,-x,z

#SG 128 P4/mnc 16
x,y,z
-x+1/2,y+1/2,-z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,-z
-x,-y,z
-y+1/2,-x+1/2,-z+1/2
-y+1/2,-x+1/2,z+1/2
-y,x,-z
-y,x,z
x+1/2,-y+1/2,-z+1/2
x+1/2,-y+1/2,z+1/2
x,y,-z
y+1/2,x+1/2,-z+1/2
y+1/2,x+1/2,z+1/2
y,-x,-z
y,-x,z

#SG 129 P4/nmm 16
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,z
-x,-y,-z
-x,y+1/2,-z
-y+1/2,-x+1/2,z
-y+1/2,x,z
-y,-x,-z
-y,x+1/2,-z
x+1/2,-y,-z
x+1/2,y+1/2,-z
x,-y+1/2,z
y+1/2,-x,-z
y+1/2,x+1/2,-z
y,-x+1/2,z
y,x,z

#SG 130 P4/ncc 16
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,z+1/2
-x,-y,-z
-x,y+1/2,-z+1/2
-y+1/2,-x+1/2,z+1/2
-y+1/2,x,z
-y,-x,-z+1/2
-y,x+1/2,-z
x+1/2,-y,-z+1/2
x+1/2,y+1/2,-z
x,-y+1/2,z+1/2
y+1/2,-x,-z
y+1/2,x+1/2,-z+1/2
y,-x+1/2,z
y,x,z+1/2

#SG 131 P4_2/mmc 16
x,y,z
-x,-y,-z
-x,-y,z
-x,y,-z
-x,y,z
-y,-x,-z+1/2
-y,-x,z+1/2
-y,x,-z+1/2
-y,x,z+1/2
x,-y,-z
x,-y,z
x,y,-z
y,-x,-z+1/2
y,-x,z+1/2
y,x,-z+1/2
y,x,z+1/2

#SG 132 P4_2/mcm 16
x,y,z
-x,-y,-z
-x,-y,z
-x,y,-z+1/2
-x,y,z+1/2
-y,-x,-z
-y,-x,z
-y,x,-z+1/2
-y,x,z+1/2
x,-y,-z+1/2
x,-y,z+1/2
x,y,-z
y,-x,-z+1/2
y,-x,z+1/2
y,x,-z
y,x,z

#SG 133 P4_2/nbc 16
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,-z
-x,-y,-z
-x,y+1/2,z
-y+1/2,-x+1/2,-z+1/2
-y+1/2,x,z+1/2
-y,-x,z+1/2
-y,x+1/2,-z+1/2
x+1/2,-y,z
x+1/2,y+1/2,-z
x,-y+1/2,-z
y+1/2,-x,-z+1/2
y+1/2,x+1/2,z+1/2
y,-x+1/2,z+1/2
y,x,-z+1/2

#SG 134 P4_2/nnm 16
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,-z+1/2
-x,-y,-z
-x,y+1/2,z+1/2
-y+1/2,-x+1/2,-z
-y+1/2,x,z+1/2
-y,-x,z
-y,x+1/2,-z+1/2
x+1/2,-y,z+1/2
x+1/2,y+1/2,-z
x,-y+1/2,-z+1/2
y+1/2,-x,-z+1/2
y+1/2,x+1/2,z
y,-x+1/2,z+1/2
y,x,-z

#SG 135 P4_2/mbc 16
x,y,z
-x+1/2,y+1/2,-z
-x+1/2,y+1/2,z
-x,-y,-z
-x,-y,z
-y+1/2,-x+1/2,-z+1/2
-y+1/2,-x+1/2,z+1/2
-y,x,-z+1/2
-y,x,z+1/2
x+1/2,-y+1/2,-z
x+1/2,-y+1/2,z
x,y,-z
y+1/2,x+1/2,-z+1/2
y+1/2,x+1/2,z+1/2
y,-x,-z+1/2
y,-x,z+1/2

#SG 136 P4_2/mnm 16
x,y,z
-x+1/2,y+1/2,-z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,-z
-x,-y,z
-y+1/2,x+1/2,-z+1/2
-y+1/2,x+1/2,z+1/2
-y,-x,-z
-y,-x,z
x+1/2,-y+1/2,-z+1/2
x+1/2,-y+1/2,z+1/2
x,y,-z
y+1/2,-x+1/2,-z+1/2
y+1/2,-x+1/2,z+1/2
y,x,-z
y,x,z

#SG 137 P4_2/nmc 16
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,z
-x,-y,-z
-x,y+1/2,-z
-y+1/2,-x+1/2,z+1/2
-y+1/2,x,z+1/2
-y,-x,-z+1/2
-y,x+1/2,-z+1/2
x+1/2,-y,-z
x+1/2,y+1/2,-z
x,-y+1/2,z
y+1/2,-x,-z+1/2
y+1/2,x+1/2,-z+1/2
y,-x+1/2,z+1/2
y,x,z+1/2

#SG 138 P4_2/ncm 16
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,z+1/2
-x,-y,-z
-x,y+1/2,-z+1/2
-y+1/2,-x+1/2,z
-y+1/2,x,z+1/2
-y,-x,-z
-y,x+1/2,-z+1/2
x+1/2,-y,-z+1/2
x+1/2,y+1/2,-z
x,-y+1/2,z+1/2
y+1/2,-x,-z+1/2
y+1/2,x+1/2,-z
y,-x+1/2,z+1/2
y,x,z

#SG 139 I4/mmm 32
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,-z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,-z
-x,-y,z
-x,y,-z
-x,y,z
-y+1/2,-x+1/2,-z+1/2
-y+1/2,-x+1/2,z+1/2
-y+1/2,x+1/2,-z+1/2
-y+1/2,x+1/2,z+1/2
-y,-x,-z
-y,-x,z
-y,x,-z
-y,x,z
x+1/2,-y+1/2,-z+1/2
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,-z+1/2
x+1/2,y+1/2,z+1/2
x,-y,-z
x,-y,z
x,y,-z
y+1/2,-x+1/2,-z+1/2
y+1/2,-x+1/2,z+1/2
y+1/2,x+1/2,-z+1/2
y+1/2,x+1/2,z+1/2
y,-x,-z
y,-x,z
y,x,-z
y,x,z

#SG 140 I4/mcm 32
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,-z
-x+1/2,y+1/2,z
-x,-y,-z
-x,-y,z
-x,y,-z+1/2
-x,y,z+1/2
-y+1/2,-x+1/2,-z
-y+1/2,-x+1/2,z
-y+1/2,x+1/2,-z+1/2
-y+1/2,x+1/2,z+1/2
-y,-x,-z+1/2
-y,-x,z+1/2
-y,x,-z
-y,x,z
x+1/2,-y+1/2,-z
x+1/2,-y+1/2,z
x+1/2,y+1/2,-z+1/2
x+1/2,y+1/2,z+1/2
x,-y,-z+1/2
x,-y,z+1/2
x,y,-z
y+1/2,-x+1/2,-z+1/2
y+1/2,-x+1/2,z+1/2
y+1/2,x+1/2,-z
y+1/2,x+1/2,z
y,-x,-z
y,-x,z
y,x,-z+1/2
y,x,z+1/2

#SG 141 I4_1/amd 32
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,z+1/2
-x+1/2,y,-z+1/2
-x,-y+1/2,z
-x,-y,-z
-x,y+1/2,-z
-x,y,z
-y+1/4,-x+1/4,-z+3/4
-y+1/4,-x+3/4,z+1/4
-y+1/4,x+1/4,-z+3/4
-y+1/4,x+3/4,z+1/4
-y+3/4,-x+1/4,z+3/4
-y+3/4,-x+3/4,-z+1/4
-y+3/4,x+1/4,z+3/4
-y+3/4,x+3/4,-z+1/4
x+1/2,-y+1/2,-z+1/2
x+1/2,-y,z+1/2
x+1/2,y+1/2,z+1/2
x+1/2,y,-z+1/2
x,-y+1/2,z
x,-y,-z
x,y+1/2,-z
y+1/4,-x+1/4,z+3/4
y+1/4,-x+3/4,-z+1/4
y+1/4,x+1/4,z+3/4
y+1/4,x+3/4,-z+1/4
y+3/4,-x+1/4,-z+3/4
y+3/4,-x+3/4,z+1/4
y+3/4,x+1/4,-z+3/4
y+3/4,x+3/4,z+1/4

#SG 142 I4_1/acd 32
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,z
-x+1/2,y,-z
-x,-y+1/2,z
-x,-y,-z
-x,y+1/2,-z+1/2
-x,y,z+1/2
-y+1/4,-x+1/4,-z+1/4
-y+1/4,-x+3/4,z+3/4
-y+1/4,x+1/4,-z+3/4
-y+1/4,x+3/4,z+1/4
-y+3/4,-x+1/4,z+1/4
-y+3/4,-x+3/4,-z+3/4
-y+3/4,x+1/4,z+3/4
-y+3/4,x+3/4,-z+1/4
x+1/2,-y+1/2,-z
x+1/2,-y,z
x+1/2,y+1/2,z+1/2
x+1/2,y,-z+1/2
x,-y+1/2,z+1/2
x,-y,-z+1/2
x,y+1/2,-z
y+1/4,-x+1/4,z+3/4
y+1/4,-x+3/4,-z+1/4
y+1/4,x+1/4,z+1/4
y+1/4,x+3/4,-z+3/4
y+3/4,-x+1/4,-z+3/4
y+3/4,-x+3/4,z+1/4
y+3/4,x+1/4,-z+1/4
y+3/4,x+3/4,z+3/4

#SG 143 P3 3
x,y,z
-x+y,-x,z
-y,x-y,z

#SG 144 P3_1 3
x,y,z
-x+y,-x,z+2/3
-y,x-y,z+1/3

#SG 145 P3_2 3
x,y,z
-x+y,-x,z+1/3
-y,x-y,z+2/3

#SG 146 R3 9
x,y,z
-x+y+1/3,-x+2/3,z+2/3
-x+y+2/3,-x+1/3,z+1/3
-x+y,-x,z
-y+1/3,x-y+2/3,z+2/3
-y+2/3,x-y+1/3,z+1/3
-y,x-y,z
x+1/3,y+2/3,z+2/3
x+2/3,y+1/3,z+1/3

#SG 147 P-3 6
x,y,z
-x+y,-x,z
-x,-y,-z
-y,x-y,z
x-y,x,-z
y,-x+y,-z

#SG 148 R-3 18
x,y,z
-x+1/3,-y+2/3,-z+2/3
-x+2/3,-y+1/3,-z+1/3
-x+y+1/3,-x+2/3,z+2/3
-x+y+2/3,-x+1/3,z+1/3
-x+y,-x,z
-x,-y,-z
-y+1/3,x-y+2/3,z+2/3
-y+2/3,x-y+1/3,z+1/3
-y,x-y,z
x+1/3,y+2/3,z+2/3
x+2/3,y+1/3,z+1/3
x-y+1/3,x+2/3,-z+2/3
x-y+2/3,x+1/3,-z+1/3
x-y,x,-z
y+1/3,-x+y+2/3,-z+2/3
y+2/3,-x+y+1/3,-z+1/3
y,-x+y,-z

#SG 149 P312 6
x,y,z
-x+y,-x,z
-x+y,y,-z
-y,-x,-z
-y,x-y,z
x,x-y,-z

#SG 150 P321 6
x,y,z
-x+y,-x,z
-x,-x+y,-z
-y,x-y,z
x-y,-y,-z
y,x,-z

#SG 151 P3_112 6
x,y,z
-x+y,-x,z+2/3
-x+y,y,-z+1/3
-y,-x,-z+2/3
-y,x-y,z+1/3
x,x-y,-z

#SG 152 P3_121 6
x,y,z
-x+y,-x,z+2/3
-x,-x+y,-z+1/3
-y,x-y,z+1/3
x-y,-y,-z+2/3
y,x,-z

#SG 153 P3_212 6
x,y,z
-x+y,-x,z+1/3
-x+y,y,-z+2/3
-y,-x,-z+1/3
-y,x-y,z+2/3
x,x-y,-z

#SG 154 P3_221 6
x,y,z
-x+y,-x,z+1/3
-x,-x+y,-z+2/3
-y,x-y,z+2/3
x-y,-y,-z+1/3
y,x,-z

#SG 155 R32 18
x,y,z
-x+1/3,-x+y+2/3,-z+2/3
-x+2/3,-x+y+1/3,-z+1/3
-x+y+1/3,-x+2/3,z+2/3
-x+y+2/3,-x+1/3,z+1/3
-x+y,-x,z
-x,-x+y,-z
-y+1/3,x-y+2/3,z+2/3
-y+2/3,x-y+1/3,z+1/3
-y,x-y,z
x+1/3,y+2/3,z+2/3
x+2/3,y+1/3,z+1/3
x-y+1/3,-y+2/3,-z+2/3
x-y+2/3,-y+1/3,-z+1/3
x-y,-y,-z
y+1/3,x+2/3,-z+2/3
y+2/3,x+1/3,-z+1/3
y,x,-z

#SG 156 P3m1 6
x,y,z
-x+y,-x,z
-x+y,y,z
-y,-x,z
-y,x-y,z
x,x-y,z

#SG 157 P31m 6
x,y,z
-x+y,-x,z
-x,-x+y,z
-y,x-y,z
x-y,-y,z
y,x,z

#SG 158 P3c1 6
x,y,z
-x+y,-x,z
-x+y,y,z+1/2
-y,-x,z+1/2
-y,x-y,z
x,x-y,z+1/2

#SG 159 P31c 6
x,y,z
-x+y,-x,z
-x,-x+y,z+1/2
-y,x-y,z
x-y,-y,z+1/2
y,x,z+1/2

#SG 160 R3m 18
x,y,z
-x+y+1/3,-x+2/3,z+2/3
-x+y+1/3,y+2/3,z+2/3
-x+y+2/3,-x+1/3,z+1/3
-x+y+2/3,y+1/3,z+1/3
-x+y,-x,z
-x+y,y,z
-y+1/3,-x+2/3,z+2/3
-y+1/3,x-y+2/3,z+2/3
-y+2/3,-x+1/3,z+1/3
-y+2/3,x-y+1/3,z+1/3
-y,-x,z
-y,x-y,z
x+1/3,x-y+2/3,z+2/3
x+1/3,y+2/3,z+2/3
x+2/3,x-y+1/3,z+1/3
x+2/3,y+1/3,z+1/3
x,x-y,z

#SG 161 R3c 18
x,y,z
-x+y+1/3,-x+2/3,z+2/3
-x+y+1/3,y+2/3,z+1/6
-x+y+2/3,-x+1/3,z+1/3
-x+y+2/3,y+1/3,z+5/6
-x+y,-x,z
-x+y,y,z+1/2
-y+1/3,-x+2/3,z+1/6
-y+1/3,x-y+2/3,z+2/3
-y+2/3,-x+1/3,z+5/6
-y+2/3,x-y+1/3,z+1/3
-y,-x,z+1/2
-y,x-y,z
x+1/3,x-y+2/3,z+1/6
x+1/3,y+2/3,z+2/3
x+2/3,x-y+1/3,z+5/6
x+2/3,y+1/3,z+1/3
x,x-y,z+1/2

#SG 162 P-31m 12
x,y,z
-x+y,-x,z
-x+y,y,-z
-x,-x+y,z
-x,-y,-z
-y,-x,-z
-y,x-y,z
x,x-y,-z
x-y,-y,z
x-y,x,-z
y,-x+y,-z
y,x,z

#SG 163 P-31c 12
x,y,z
-x+y,-x,z
-x+y,y,-z+1/2
-x,-x+y,z+1/2
-x,-y,-z
-y,-x,-z+1/2
-y,x-y,z
x,x-y,-z+1/2
x-y,-y,z+1/2
x-y,x,-z
y,-x+y,-z
y,x,z+1/2

#SG 164 P-3m1 12
x,y,z
-x+y,-x,z
-x+y,y,z
-x,-x+y,-z
-x,-y,-z
-y,-x,z
-y,x-y,z
x,x-y,z
x-y,-y,-z
x-y,x,-z
y,-x+y,-z
y,x,-z

#SG 165 P-3c1 12
x,y,z
-x+y,-x,z
-x+y,y,z+1/2
-x,-x+y,-z+1/2
-x,-y,-z
-y,-x,z+1/2
-y,x-y,z
x,x-y,z+1/2
x-y,-y,-z+1/2
x-y,x,-z
y,-x+y,-z
y,x,-z+1/2

#SG 166 R-3m 36
x,y,z
-x+1/3,-x+y+2/3,-z+2/3
-x+1/3,-y+2/3,-z+2/3
-x+2/3,-x+y+1/3,-z+1/3
-x+2/3,-y+1/3,-z+1/3
-x+y+1/3,-x+2/3,z+2/3
-x+y+1/3,y+2/3,z+2/3
-x+y+2/3,-x+1/3,z+1/3
-x+y+2/3,y+1/3,z+1/3
-x+y,-x,z
-x+y,y,z
-x,-x+y,-z
-x,-y,-z
-y+1/3,-x+2/3,z+2/3
-y+1/3,x-y+2/3,z+2/3
-y+2/3,-x+1/3,z+1/3
-y+2/3,x-y+1/3,z+1/3
-y,-x,z
-y,x-y,z
x+1/3,x-y+2/3,z+2/3
x+1/3,y+2/3,z+2/3
x+2/3,x-y+1/3,z+1/3
x+2/3,y+1/3,z+1/3
x,x-y,z
x-y+1/3,-y+2/3,-z+2/3
x-y+1/3,x+2/3,-z+2/3
x-y+2/3,-y+1/3,-z+1/3
x-y+2/3,x+1/3,-z+1/3
x-y,-y,-z
x-y,x,-z
y+1/3,-x+y+2/3,-z+2/3
y+1/3,x+2/3,-z+2/3
y+2/3,-x+y+1/3,-z+1/3
y+2/3,x+1/3,-z+1/3
y,-x+y,-z
y,x,-z

#SG 167 R-3c 36
x,y,z
-x+1/3,-x+y+2/3,-z+1/6
-x+1/3,-y+2/3,-z+2/3
-x+2/3,-x+y+1/3,-z+5/6
-x+2/3,-y+1/3,-z+1/3
-x+y+1/3,-x+2/3,z+2/3
-x+y+1/3,y+2/3,z+1/6
-x+y+2/3,-x+1/3,z+1/3
-x+y+2/3,y+1/3,z+5/6
-x+y,-x,z
-x+y,y,z+1/2
-x,-x+y,-z+1/2
-x,-y,-z
-y+1/3,-x+2/3,z+1/6
-y+1/3,x-y+2/3,z+2/3
-y+2/3,-x+1/3,z+5/6
-y+2/3,x-y+1/3,z+1/3
-y,-x,z+1/2
-y,x-y,z
x+1/3,x-y+2/3,z+1/6
x+1/3,y+2/3,z+2/3
x+2/3,x-y+1/3,z+5/6
x+2/3,y+1/3,z+1/3
x,x-y,z+1/2
x-y+1/3,-y+2/3,-z+1/6
x-y+1/3,x+2/3,-z+2/3
x-y+2/3,-y+1/3,-z+5/6
x-y+2/3,x+1/3,-z+1/3
x-y,-y,-z+1/2
x-y,x,-z
y+1/3,-x+y+2/3,-z+2/3
y+1/3,x+2/3,-z+1/6
y+2/3,-x+y+1/3,-z+1/3
y+2/3,x+1/3,-z+5/6
y,-x+y,-z
y,x,-z+1/2

#SG 168 P6 6
x,y,z
-x+y,-x,z
-x,-y,z
-y,x-y,z
x-y,x,z
y,-x+y,z

#SG 169 P6_1 6
x,y,z
-x+y,-x,z+2/3
-x,-y,z+1/2
-y,x-y,z+1/3
x-y,x,z+1/6
y,-x+y,z+5/6

#SG 170 P6_5 6
x,y,z
-x+y,-x,z+1/3
-x,-y,z+1/2
-y,x-y,z+2/3
x-y,x,z+5/6
y,-x+y,z+1/6

#SG 171 P6_2 6
x,y,z
-x+y,-x,z+1/3
-x,-y,z
-y,x-y,z+2/3
x-y,x,z+1/3
y,-x+y,z+2/3

#SG 172 P6_4 6
x,y,z
-x+y,-x,z+2/3
-x,-y,z
-y,x-y,z+1/3
x-y,x,z+2/3
y,-x+y,z+1/3

#SG 173 P6_3 6
x,y,z
-x+y,-x,z
-x,-y,z+1/2
-y,x-y,z
x-y,x,z+1/2
y,-x+y,z+1/2

#SG 174 P-6 6
x,y,z
-x+y,-x,-z
-x+y,-x,z
-y,x-y,-z
-y,x-y,z
x,y,-z

#SG 175 P6/m 12
x,y,z
-x+y,-x,-z
-x+y,-x,z
-x,-y,-z
-x,-y,z
-y,x-y,-z
-y,x-y,z
x,y,-z
x-y,x,-z
x-y,x,z
y,-x+y,-z
y,-x+y,z

#SG 176 P6_3/m 12
x,y,z
-x+y,-x,-z+1/2
-x+y,-x,z
-x,-y,-z
-x,-y,z+1/2
-y,x-y,-z+1/2
-y,x-y,z
x,y,-z+1/2
x-y,x,-z
x-y,x,z+1/2
y,-x+y,-z
y,-x+y,z+1/2

#SG 177 P622 12
x,y,z
-x+y,-x,z
-x+y,y,-z
-x,-x+y,-z
-x,-y,z
-y,-x,-z
-y,x-y,z
x,x-y,-z
x-y,-y,-z
x-y,x,z
y,-x+y,z
y,x,-z

#SG 178 P6_122 12
x,y,z
-x+y,-x,z+2/3
-x+y,y,-z+1/2
-x,-x+y,-z+2/3
-x,-y,z+1/2
-y,-x,-z+5/6
-y,x-y,z+1/3
x,x-y,-z+1/6
x-y,-y,-z
x-y,x,z+1/6
y,-x+y,z+5/6
y,x,-z+1/3

#SG 179 P6_522 12
x,y,z
-x+y,-x,z+1/3
-x+y,y,-z+1/2
-x,-x+y,-z+1/3
-x,-y,z+1/2
-y,-x,-z+1/6
-y,x-y,z+2/3
x,x-y,-z+5/6
x-y,-y,-z
x-y,x,z+5/6
y,-x+y,z+1/6
y,x,-z+2/3

#SG 180 P6_222 12
x,y,z
-x+y,-x,z+1/3
-x+y,y,-z
-x,-x+y,-z+1/3
-x,-y,z
-y,-x,-z+2/3
-y,x-y,z+2/3
x,x-y,-z+1/3
x-y,-y,-z
x-y,x,z+1/3
y,-x+y,z+2/3
y,x,-z+2/3

#SG 181 P6_422 12
x,y,z
-x+y,-x,z+2/3
-x+y,y,-z
-x,-x+y,-z+2/3
-x,-y,z
-y,-x,-z+1/3
-y,x-y,z+1/3
x,x-y,-z+2/3
x-y,-y,-z
x-y,x,z+2/3
y,-x+y,z+1/3
y,x,-z+1/3

#SG 182 P6_322 12
x,y,z
-x+y,-x,z
-x+y,y,-z+1/2
-x,-x+y,-z
-x,-y,z+1/2
-y,-x,-z+1/2
-y,x-y,z
x,x-y,-z+1/2
x-y,-y,-z
x-y,x,z+1/2
y,-x+y,z+1/2
y,x,-z

#SG 183 P6mm 12
x,y,z
-x+y,-x,z
-x+y,y,z
-x,-x+y,z
-x,-y,z
-y,-x,z
-y,x-y,z
x,x-y,z
x-y,-y,z
x-y,x,z
y,-x+y,z
y,x,z

#SG 184 P6cc 12
x,y,z
-x+y,-x,z
-x+y,y,z+1/2
-x,-x+y,z+1/2
-x,-y,z
-y,-x,z+1/2
-y,x-y,z
x,x-y,z+1/2
x-y,-y,z+1/2
x-y,x,z
y,-x+y,z
y,x,z+1/2

#SG 185 P6_3cm 12
x,y,z
-x+y,-x,z
-x+y,y,z+1/2
-x,-x+y,z
-x,-y,z+1/2
-y,-x,z+1/2
-y,x-y,z
x,x-y,z+1/2
x-y,-y,z
x-y,x,z+1/2
y,-x+y,z+1/2
y,x,z

#SG 186 P6_3mc 12
x,y,z
-x+y,-x,z
-x+y,y,z
-x,-x+y,z+1/2
-x,-y,z+1/2
-y,-x,z
-y,x-y,z
x,x-y,z
x-y,-y,z+1/2
x-y,x,z+1/2
y,-x+y,z+1/2
y,x,z+1/2

#SG 187 P-6m2 12
x,y,z
-x+y,-x,-z
-x+y,-x,z
-x+y,y,-z
-x+y,y,z
-y,-x,-z
-y,-x,z
-y,x-y,-z
-y,x-y,z
x,x-y,-z
x,x-y,z
x,y,-z

#SG 188 P-6c2 12
x,y,z
-x+y,-x,-z+1/2
-x+y,-x,z
-x+y,y,-z
-x+y,y,z+1/2
-y,-x,-z
-y,-x,z+1/2
-y,x-y,-z+1/2
-y,x-y,z
x,x-y,-z
x,x-y,z+1/2
x,y,-z+1/2

#SG 189 P-62m 12
x,y,z
-x+y,-x,-z
-x+y,-x,z
-x,-x+y,-z
-x,-x+y,z
-y,x-y,-z
-y,x-y,z
x,y,-z
x-y,-y,-z
x-y,-y,z
y,x,-z
y,x,z

#SG 190 P-62c 12
x,y,z
-x+y,-x,-z+1/2
-x+y,-x,z
-x,-x+y,-z
-x,-x+y,z+1/2
-y,x-y,-z+1/2
-y,x-y,z
x,y,-z+1/2
x-y,-y,-z
x-y,-y,z+1/2
y,x,-z
y,x,z+1/2

#SG 191 P6/mmm 24
x,y,z
-x+y,-x,-z
-x+y,-x,z
-x+y,y,-z
-x+y,y,z
-x,-x+y,-z
-x,-x+y,z
-x,-y,-z
-x,-y,z
-y,-x,-z
-y,-x,z
-y,x-y,-z
-y,x-y,z
x,x-y,-z
x,x-y,z
x,y,-z
x-y,-y,-z
x-y,-y,z
x-y,x,-z
x-y,x,z
y,-x+y,-z
y,-x+y,z
y,x,-z
y,x,z

#SG 192 P6/mcc 24
x,y,z
-x+y,-x,-z
-x+y,-x,z
-x+y,y,-z+1/2
-x+y,y,z+1/2
-x,-x+y,-z+1/2
-x,-x+y,z+1/2
-x,-y,-z
-x,-y,z
-y,-x,-z+1/2
-y,-x,z+1/2
-y,x-y,-z
-y,x-y,z
x,x-y,-z+1/2
x,x-y,z+1/2
x,y,-z
x-y,-y,-z+1/2
x-y,-y,z+1/2
x-y,x,-z
x-y,x,z
y,-x+y,-z
y,-x+y,z
y,x,-z+1/2
y,x,z+1/2

#SG 193 P6_3/mcm 24
x,y,z
-x+y,-x,-z+1/2
-x+y,-x,z
-x+y,y,-z
-x+y,y,z+1/2
-x,-x+y,-z+1/2
-x,-x+y,z
-x,-y,-z
-x,-y,z+1/2
-y,-x,-z
-y,-x,z+1/2
-y,x-y,-z+1/2
-y,x-y,z
x,x-y,-z
x,x-y,z+1/2
x,y,-z+1/2
x-y,-y,-z+1/2
x-y,-y,z
x-y,x,-z
x-y,x,z+1/2
y,-x+y,-z
y,-x+y,z+1/2
y,x,-z+1/2
y,x,z

#SG 194 P6_3/mmc 24
x,y,z
-x+y,-x,-z+1/2
-x+y,-x,z
-x+y,y,-z+1/2
-x+y,y,z
-x,-x+y,-z
-x,-x+y,z+1/2
-x,-y,-z
-x,-y,z+1/2
-y,-x,-z+1/2
-y,-x,z
-y,x-y,-z+1/2
-y,x-y,z
x,x-y,-z+1/2
x,x-y,z
x,y,-z+1/2
x-y,-y,-z
x-y,-y,z+1/2
x-y,x,-z
x-y,x,z+1/2
y,-x+y,-z
y,-x+y,z+1/2
y,x,-z
y,x,z+1/2

#SG 195 P23 12
x,y,z
-x,-y,z
-x,y,-z
-y,-z,x
-y,z,-x
-z,-x,y
-z,x,-y
x,-y,-z
y,-z,-x
y,z,x
z,-x,-y
z,x,y

#SG 196 F23 48
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,-z
-x+1/2,y,-z+1/2
-x,-y+1/2,z+1/2
-x,-y,z
-x,y+1/2,-z+1/2
-x,y,-z
-y+1/2,-z+1/2,x
-y+1/2,-z,x+1/2
-y+1/2,z+1/2,-x
-y+1/2,z,-x+1/2
-y,-z+1/2,x+1/2
-y,-z,x
-y,z+1/2,-x+1/2
-y,z,-x
-z+1/2,-x+1/2,y
-z+1/2,-x,y+1/2
-z+1/2,x+1/2,-y
-z+1/2,x,-y+1/2
-z,-x+1/2,y+1/2
-z,-x,y
-z,x+1/2,-y+1/2
-z,x,-y
x+1/2,-y+1/2,-z
x+1/2,-y,-z+1/2
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x,-y+1/2,-z+1/2
x,-y,-z
x,y+1/2,z+1/2
y+1/2,-z+1/2,-x
y+1/2,-z,-x+1/2
y+1/2,z+1/2,x
y+1/2,z,x+1/2
y,-z+1/2,-x+1/2
y,-z,-x
y,z+1/2,x+1/2
y,z,x
z+1/2,-x+1/2,-y
z+1/2,-x,-y+1/2
z+1/2,x+1/2,y
z+1/2,x,y+1/2
z,-x+1/2,-y+1/2
z,-x,-y
z,x+1/2,y+1/2
z,x,y

#SG 197 I23 24
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,-z+1/2
-x,-y,z
-x,y,-z
-y+1/2,-z+1/2,x+1/2
-y+1/2,z+1/2,-x+1/2
-y,-z,x
-y,z,-x
-z+1/2,-x+1/2,y+1/2
-z+1/2,x+1/2,-y+1/2
-z,-x,y
-z,x,-y
x+1/2,-y+1/2,-z+1/2
x+1/2,y+1/2,z+1/2
x,-y,-z
y+1/2,-z+1/2,-x+1/2
y+1/2,z+1/2,x+1/2
y,-z,-x
y,z,x
z+1/2,-x+1/2,-y+1/2
z+1/2,x+1/2,y+1/2
z,-x,-y
z,x,y

#SG 198 P2_13 12
x,y,z
-x+1/2,-y,z+1/2
-x,y+1/2,-z+1/2
-y+1/2,-z,x+1/2
-y,z+1/2,-x+1/2
-z+1/2,-x,y+1/2
-z,x+1/2,-y+1/2
x+1/2,-y+1/2,-z
y+1/2,-z+1/2,-x
y,z,x
z+1/2,-x+1/2,-y
z,x,y

#SG 199 I2_13 24
x,y,z
-x+1/2,-y,z+1/2
-x+1/2,y,-z
-x,-y+1/2,z
-x,y+1/2,-z+1/2
-y+1/2,-z,x+1/2
-y+1/2,z,-x
-y,-z+1/2,x
-y,z+1/2,-x+1/2
-z+1/2,-x,y+1/2
-z+1/2,x,-y
-z,-x+1/2,y
-z,x+1/2,-y+1/2
x+1/2,-y+1/2,-z
x+1/2,y+1/2,z+1/2
x,-y,-z+1/2
y+1/2,-z+1/2,-x
y+1/2,z+1/2,x+1/2
y,-z,-x+1/2
y,z,x
z+1/2,-x+1/2,-y
z+1/2,x+1/2,y+1/2
z,-x,-y+1/2
z,x,y

#SG 200 Pm-3 24
x,y,z
-x,-y,-z
-x,-y,z
-x,y,-z
-x,y,z
-y,-z,-x
-y,-z,x
-y,z,-x
-y,z,x
-z,-x,-y
-z,-x,y
-z,x,-y
-z,x,y
x,-y,-z
x,-y,z
x,y,-z
y,-z,-x
y,-z,x
y,z,-x
y,z,x
z,-x,-y
z,-x,y
z,x,-y
z,x,y

#SG 201 Pn-3 24
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,y,-z+1/2
-x,-y,-z
-x,y+1/2,z+1/2
-y+1/2,-z+1/2,x
-y+1/2,z,-x+1/2
-y,-z,-x
-y,z+1/2,x+1/2
-z+1/2,-x+1/2,y
-z+1/2,x,-y+1/2
-z,-x,-y
-z,x+1/2,y+1/2
x+1/2,-y,z+1/2
x+1/2,y+1/2,-z
x,-y+1/2,-z+1/2
y+1/2,-z,x+1/2
y+1/2,z+1/2,-x
y,-z+1/2,-x+1/2
y,z,x
z+1/2,-x,y+1/2
z+1/2,x+1/2,-y
z,-x+1/2,-y+1/2
z,x,y

#SG 202 Fm-3 96
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y+1/2,z
-x+1/2,-y,-z+1/2
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,-z
-x+1/2,y+1/2,z
-x+1/2,y,-z+1/2
-x+1/2,y,z+1/2
-x,-y+1/2,-z+1/2
-x,-y+1/2,z+1/2
-x,-y,-z
-x,-y,z
-x,y+1/2,-z+1/2
-x,y+1/2,z+1/2
-x,y,-z
-x,y,z
-y+1/2,-z+1/2,-x
-y+1/2,-z+1/2,x
-y+1/2,-z,-x+1/2
-y+1/2,-z,x+1/2
-y+1/2,z+1/2,-x
-y+1/2,z+1/2,x
-y+1/2,z,-x+1/2
-y+1/2,z,x+1/2
-y,-z+1/2,-x+1/2
-y,-z+1/2,x+1/2
-y,-z,-x
-y,-z,x
-y,z+1/2,-x+1/2
-y,z+1/2,x+1/2
-y,z,-x
-y,z,x
-z+1/2,-x+1/2,-y
-z+1/2,-x+1/2,y
-z+1/2,-x,-y+1/2
-z+1/2,-x,y+1/2
-z+1/2,x+1/2,-y
-z+1/2,x+1/2,y
-z+1/2,x,-y+1/2
-z+1/2,x,y+1/2
-z,-x+1/2,-y+1/2
-z,-x+1/2,y+1/2
-z,-x,-y
-z,-x,y
-z,x+1/2,-y+1/2
-z,x+1/2,y+1/2
-z,x,-y
-z,x,y
x+1/2,-y+1/2,-z
x+1/2,-y+1/2,z
x+1/2,-y,-z+1/2
x+1/2,-y,z+1/2
x+1/2,y+1/2,-z
x+1/2,y+1/2,z
x+1/2,y,-z+1/2
x+1/2,y,z+1/2
x,-y+1/2,-z+1/2
x,-y+1/2,z+1/2
x,-y,-z
x,-y,z
x,y+1/2,-z+1/2
x,y+1/2,z+1/2
x,y,-z
y+1/2,-z+1/2,-x
y+1/2,-z+1/2,x
y+1/2,-z,-x+1/2
y+1/2,-z,x+1/2
y+1/2,z+1/2,-x
y+1/2,z+1/2,x
y+1/2,z,-x+1/2
y+1/2,z,x+1/2
y,-z+1/2,-x+1/2
y,-z+1/2,x+1/2
y,-z,-x
y,-z,x
y,z+1/2,-x+1/2
y,z+1/2,x+1/2
y,z,-x
y,z,x
z+1/2,-x+1/2,-y
z+1/2,-x+1/2,y
z+1/2,-x,-y+1/2
z+1/2,-x,y+1/2
z+1/2,x+1/2,-y
z+1/2,x+1/2,y
z+1/2,x,-y+1/2
z+1/2,x,y+1/2
z,-x+1/2,-y+1/2
z,-x+1/2,y+1/2
z,-x,-y
z,-x,y
z,x+1/2,-y+1/2
z,x+1/2,y+1/2
z,x,-y
z,x,y

#SG 203 Fd-3 96
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y,-z+1/2
-x+1/2,y+1/4,z+3/4
-x+1/2,y+3/4,z+1/4
-x+1/4,-y+1/4,z
-x+1/4,-y+3/4,z+1/2
-x+1/4,y+1/2,-z+3/4
-x+1/4,y,-z+1/4
-x+3/4,-y+1/4,z+1/2
-x+3/4,-y+3/4,z
-x+3/4,y+1/2,-z+1/4
-x+3/4,y,-z+3/4
-x,-y+1/2,-z+1/2
-x,-y,-z
-x,y+1/4,z+1/4
-x,y+3/4,z+3/4
-y+1/2,-z+1/2,-x
-y+1/2,-z,-x+1/2
-y+1/2,z+1/4,x+3/4
-y+1/2,z+3/4,x+1/4
-y+1/4,-z+1/4,x
-y+1/4,-z+3/4,x+1/2
-y+1/4,z+1/2,-x+3/4
-y+1/4,z,-x+1/4
-y+3/4,-z+1/4,x+1/2
-y+3/4,-z+3/4,x
-y+3/4,z+1/2,-x+1/4
-y+3/4,z,-x+3/4
-y,-z+1/2,-x+1/2
-y,-z,-x
-y,z+1/4,x+1/4
-y,z+3/4,x+3/4
-z+1/2,-x+1/2,-y
-z+1/2,-x,-y+1/2
-z+1/2,x+1/4,y+3/4
-z+1/2,x+3/4,y+1/4
-z+1/4,-x+1/4,y
-z+1/4,-x+3/4,y+1/2
-z+1/4,x+1/2,-y+3/4
-z+1/4,x,-y+1/4
-z+3/4,-x+1/4,y+1/2
-z+3/4,-x+3/4,y
-z+3/4,x+1/2,-y+1/4
-z+3/4,x,-y+3/4
-z,-x+1/2,-y+1/2
-z,-x,-y
-z,x+1/4,y+1/4
-z,x+3/4,y+3/4
x+1/2,-y+1/4,-z+3/4
x+1/2,-y+3/4,-z+1/4
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x+1/4,-y+1/2,z+3/4
x+1/4,-y,z+1/4
x+1/4,y+1/4,-z
x+1/4,y+3/4,-z+1/2
x+3/4,-y+1/2,z+1/4
x+3/4,-y,z+3/4
x+3/4,y+1/4,-z+1/2
x+3/4,y+3/4,-z
x,-y+1/4,-z+1/4
x,-y+3/4,-z+3/4
x,y+1/2,z+1/2
y+1/2,-z+1/4,-x+3/4
y+1/2,-z+3/4,-x+1/4
y+1/2,z+1/2,x
y+1/2,z,x+1/2
y+1/4,-z+1/2,x+3/4
y+1/4,-z,x+1/4
y+1/4,z+1/4,-x
y+1/4,z+3/4,-x+1/2
y+3/4,-z+1/2,x+1/4
y+3/4,-z,x+3/4
y+3/4,z+1/4,-x+1/2
y+3/4,z+3/4,-x
y,-z+1/4,-x+1/4
y,-z+3/4,-x+3/4
y,z+1/2,x+1/2
y,z,x
z+1/2,-x+1/4,-y+3/4
z+1/2,-x+3/4,-y+1/4
z+1/2,x+1/2,y
z+1/2,x,y+1/2
z+1/4,-x+1/2,y+3/4
z+1/4,-x,y+1/4
z+1/4,x+1/4,-y
z+1/4,x+3/4,-y+1/2
z+3/4,-x+1/2,y+1/4
z+3/4,-x,y+3/4
z+3/4,x+1/4,-y+1/2
z+3/4,x+3/4,-y
z,-x+1/4,-y+1/4
z,-x+3/4,-y+3/4
z,x+1/2,y+1/2
z,x,y

#SG 204 Im-3 48
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y+1/2,z+1/2
-x+1/2,y+1/2,-z+1/2
-x+1/2,y+1/2,z+1/2
-x,-y,-z
-x,-y,z
-x,y,-z
-x,y,z
-y+1/2,-z+1/2,-x+1/2
-y+1/2,-z+1/2,x+1/2
-y+1/2,z+1/2,-x+1/2
-y+1/2,z+1/2,x+1/2
-y,-z,-x
-y,-z,x
-y,z,-x
-y,z,x
-z+1/2,-x+1/2,-y+1/2
-z+1/2,-x+1/2,y+1/2
-z+1/2,x+1/2,-y+1/2
-z+1/2,x+1/2,y+1/2
-z,-x,-y
-z,-x,y
-z,x,-y
-z,x,y
x+1/2,-y+1/2,-z+1/2
x+1/2,-y+1/2,z+1/2
x+1/2,y+1/2,-z+1/2
x+1/2,y+1/2,z+1/2
x,-y,-z
x,-y,z
x,y,-z
y+1/2,-z+1/2,-x+1/2
y+1/2,-z+1/2,x+1/2
y+1/2,z+1/2,-x+1/2
y+1/2,z+1/2,x+1/2
y,-z,-x
y,-z,x
y,z,-x
y,z,x
z+1/2,-x+1/2,-y+1/2
z+1/2,-x+1/2,y+1/2
z+1/2,x+1/2,-y+1/2
z+1/2,x+1/2,y+1/2
z,-x,-y
z,-x,y
z,x,-y
z,x,y

#SG 205 Pa-3 24
x,y,z
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,z
-x,-y,-z
-x,y+1/2,-z+1/2
-y+1/2,-z,x+1/2
-y+1/2,z+1/2,x
-y,-z,-x
-y,z+1/2,-x+1/2
-z+1/2,-x,y+1/2
-z+1/2,x+1/2,y
-z,-x,-y
-z,x+1/2,-y+1/2
x+1/2,-y+1/2,-z
x+1/2,y,-z+1/2
x,-y+1/2,z+1/2
y+1/2,-z+1/2,-x
y+1/2,z,-x+1/2
y,-z+1/2,x+1/2
y,z,x
z+1/2,-x+1/2,-y
z+1/2,x,-y+1/2
z,-x+1/2,y+1/2
z,x,y

#SG 206 Ia-3 48
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,z
-x+1/2,y,-z
-x,-y+1/2,z
-x,-y,-z
-x,y+1/2,-z+1/2
-x,y,z+1/2
-y+1/2,-z+1/2,-x+1/2
-y+1/2,-z,x+1/2
-y+1/2,z+1/2,x
-y+1/2,z,-x
-y,-z+1/2,x
-y,-z,-x
-y,z+1/2,-x+1/2
-y,z,x+1/2
-z+1/2,-x+1/2,-y+1/2
-z+1/2,-x,y+1/2
-z+1/2,x+1/2,y
-z+1/2,x,-y
-z,-x+1/2,y
-z,-x,-y
-z,x+1/2,-y+1/2
-z,x,y+1/2
x+1/2,-y+1/2,-z
x+1/2,-y,z
x+1/2,y+1/2,z+1/2
x+1/2,y,-z+1/2
x,-y+1/2,z+1/2
x,-y,-z+1/2
x,y+1/2,-z
y+1/2,-z+1/2,-x
y+1/2,-z,x
y+1/2,z+1/2,x+1/2
y+1/2,z,-x+1/2
y,-z+1/2,x+1/2
y,-z,-x+1/2
y,z+1/2,-x
y,z,x
z+1/2,-x+1/2,-y
z+1/2,-x,y
z+1/2,x+1/2,y+1/2
z+1/2,x,-y+1/2
z,-x+1/2,y+1/2
z,-x,-y+1/2
z,x+1/2,-y
z,x,y

#SG 207 P432 24
x,y,z
-x,-y,z
-x,-z,-y
-x,y,-z
-x,z,y
-y,-x,-z
-y,-z,x
-y,x,z
-y,z,-x
-z,-x,y
-z,-y,-x
-z,x,-y
-z,y,x
x,-y,-z
x,-z,y
x,z,-y
y,-x,z
y,-z,-x
y,x,-z
y,z,x
z,-x,-y
z,-y,x
z,x,y
z,y,-x

#SG 208 P4_232 24
x,y,z
-x+1/2,-z+1/2,-y+1/2
-x+1/2,z+1/2,y+1/2
-x,-y,z
-x,y,-z
-y+1/2,-x+1/2,-z+1/2
-y+1/2,x+1/2,z+1/2
-y,-z,x
-y,z,-x
-z+1/2,-y+1/2,-x+1/2
-z+1/2,y+1/2,x+1/2
-z,-x,y
-z,x,-y
x+1/2,-z+1/2,y+1/2
x+1/2,z+1/2,-y+1/2
x,-y,-z
y+1/2,-x+1/2,z+1/2
y+1/2,x+1/2,-z+1/2
y,-z,-x
y,z,x
z+1/2,-y+1/2,x+1/2
z+1/2,y+1/2,-x+1/2
z,-x,-y
z,x,y

#SG 209 F432 96
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,-y,z+1/2
-x+1/2,-z+1/2,-y
-x+1/2,-z,-y+1/2
-x+1/2,y+1/2,-z
-x+1/2,y,-z+1/2
-x+1/2,z+1/2,y
-x+1/2,z,y+1/2
-x,-y+1/2,z+1/2
-x,-y,z
-x,-z+1/2,-y+1/2
-x,-z,-y
-x,y+1/2,-z+1/2
-x,y,-z
-x,z+1/2,y+1/2
-x,z,y
-y+1/2,-x+1/2,-z
-y+1/2,-x,-z+1/2
-y+1/2,-z+1/2,x
-y+1/2,-z,x+1/2
-y+1/2,x+1/2,z
-y+1/2,x,z+1/2
-y+1/2,z+1/2,-x
-y+1/2,z,-x+1/2
-y,-x+1/2,-z+1/2
-y,-x,-z
-y,-z+1/2,x+1/2
-y,-z,x
-y,x+1/2,z+1/2
-y,x,z
-y,z+1/2,-x+1/2
-y,z,-x
-z+1/2,-x+1/2,y
-z+1/2,-x,y+1/2
-z+1/2,-y+1/2,-x
-z+1/2,-y,-x+1/2
-z+1/2,x+1/2,-y
-z+1/2,x,-y+1/2
-z+1/2,y+1/2,x
-z+1/2,y,x+1/2
-z,-x+1/2,y+1/2
-z,-x,y
-z,-y+1/2,-x+1/2
-z,-y,-x
-z,x+1/2,-y+1/2
-z,x,-y
-z,y+1/2,x+1/2
-z,y,x
x+1/2,-y+1/2,-z
x+1/2,-y,-z+1/2
x+1/2,-z+1/2,y
x+1/2,-z,y+1/2
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x+1/2,z+1/2,-y
x+1/2,z,-y+1/2
x,-y+1/2,-z+1/2
x,-y,-z
x,-z+1/2,y+1/2
x,-z,y
x,y+1/2,z+1/2
x,z+1/2,-y+1/2
x,z,-y
y+1/2,-x+1/2,z
y+1/2,-x,z+1/2
y+1/2,-z+1/2,-x
y+1/2,-z,-x+1/2
y+1/2,x+1/2,-z
y+1/2,x,-z+1/2
y+1/2,z+1/2,x
y+1/2,z,x+1/2
y,-x+1/2,z+1/2
y,-x,z
y,-z+1/2,-x+1/2
y,-z,-x
y,x+1/2,-z+1/2
y,x,-z
y,z+1/2,x+1/2
y,z,x
z+1/2,-x+1/2,-y
z+1/2,-x,-y+1/2
z+1/2,-y+1/2,x
z+1/2,-y,x+1/2
z+1/2,x+1/2,y
z+1/2,x,y+1/2
z+1/2,y+1/2,-x
z+1/2,y,-x+1/2
z,-x+1/2,-y+1/2
z,-x,-y
z,-y+1/2,x+1/2
z,-y,x
z,x+1/2,y+1/2
z,x,y
z,y+1/2,-x+1/2
z,y,-x

#SG 210 F4_132 96
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,-z
-x+1/2,y,-z+1/2
-x+1/4,-z+1/4,-y+1/4
-x+1/4,-z+3/4,-y+3/4
-x+1/4,z+1/4,y+1/4
-x+1/4,z+3/4,y+3/4
-x+3/4,-z+1/4,-y+3/4
-x+3/4,-z+3/4,-y+1/4
-x+3/4,z+1/4,y+3/4
-x+3/4,z+3/4,y+1/4
-x,-y+1/2,z+1/2
-x,-y,z
-x,y+1/2,-z+1/2
-x,y,-z
-y+1/2,-z+1/2,x
-y+1/2,-z,x+1/2
-y+1/2,z+1/2,-x
-y+1/2,z,-x+1/2
-y+1/4,-x+1/4,-z+1/4
-y+1/4,-x+3/4,-z+3/4
-y+1/4,x+1/4,z+1/4
-y+1/4,x+3/4,z+3/4
-y+3/4,-x+1/4,-z+3/4
-y+3/4,-x+3/4,-z+1/4
-y+3/4,x+1/4,z+3/4
-y+3/4,x+3/4,z+1/4
-y,-z+1/2,x+1/2
-y,-z,x
-y,z+1/2,-x+1/2
-y,z,-x
-z+1/2,-x+1/2,y
-z+1/2,-x,y+1/2
-z+1/2,x+1/2,-y
-z+1/2,x,-y+1/2
-z+1/4,-y+1/4,-x+1/4
-z+1/4,-y+3/4,-x+3/4
-z+1/4,y+1/4,x+1/4
-z+1/4,y+3/4,x+3/4
-z+3/4,-y+1/4,-x+3/4
-z+3/4,-y+3/4,-x+1/4
-z+3/4,y+1/4,x+3/4
-z+3/4,y+3/4,x+1/4
-z,-x+1/2,y+1/2
-z,-x,y
-z,x+1/2,-y+1/2
-z,x,-y
x+1/2,-y+1/2,-z
x+1/2,-y,-z+1/2
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x+1/4,-z+1/4,y+1/4
x+1/4,-z+3/4,y+3/4
x+1/4,z+1/4,-y+1/4
x+1/4,z+3/4,-y+3/4
x+3/4,-z+1/4,y+3/4
x+3/4,-z+3/4,y+1/4
x+3/4,z+1/4,-y+3/4
x+3/4,z+3/4,-y+1/4
x,-y+1/2,-z+1/2
x,-y,-z
x,y+1/2,z+1/2
y+1/2,-z+1/2,-x
y+1/2,-z,-x+1/2
y+1/2,z+1/2,x
y+1/2,z,x+1/2
y+1/4,-x+1/4,z+1/4
y+1/4,-x+3/4,z+3/4
y+1/4,x+1/4,-z+1/4
y+1/4,x+3/4,-z+3/4
y+3/4,-x+1/4,z+3/4
y+3/4,-x+3/4,z+1/4
y+3/4,x+1/4,-z+3/4
y+3/4,x+3/4,-z+1/4
y,-z+1/2,-x+1/2
y,-z,-x
y,z+1/2,x+1/2
y,z,x
z+1/2,-x+1/2,-y
z+1/2,-x,-y+1/2
z+1/2,x+1/2,y
z+1/2,x,y+1/2
z+1/4,-y+1/4,x+1/4
z+1/4,-y+3/4,x+3/4
z+1/4,y+1/4,-x+1/4
z+1/4,y+3/4,-x+3/4
z+3/4,-y+1/4,x+3/4
z+3/4,-y+3/4,x+1/4
z+3/4,y+1/4,-x+3/4
z+3/4,y+3/4,-x+1/4
z,-x+1/2,-y+1/2
z,-x,-y
z,x+1/2,y+1/2
z,x,y

#SG 211 I432 48
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,-z+1/2,-y+1/2
-x+1/2,y+1/2,-z+1/2
-x+1/2,z+1/2,y+1/2
-x,-y,z
-x,-z,-y
-x,y,-z
-x,z,y
-y+1/2,-x+1/2,-z+1/2
-y+1/2,-z+1/2,x+1/2
-y+1/2,x+1/2,z+1/2
-y+1/2,z+1/2,-x+1/2
-y,-x,-z
-y,-z,x
-y,x,z
-y,z,-x
-z+1/2,-x+1/2,y+1/2
-z+1/2,-y+1/2,-x+1/2
-z+1/2,x+1/2,-y+1/2
-z+1/2,y+1/2,x+1/2
-z,-x,y
-z,-y,-x
-z,x,-y
-z,y,x
x+1/2,-y+1/2,-z+1/2
x+1/2,-z+1/2,y+1/2
x+1/2,y+1/2,z+1/2
x+1/2,z+1/2,-y+1/2
x,-y,-z
x,-z,y
x,z,-y
y+1/2,-x+1/2,z+1/2
y+1/2,-z+1/2,-x+1/2
y+1/2,x+1/2,-z+1/2
y+1/2,z+1/2,x+1/2
y,-x,z
y,-z,-x
y,x,-z
y,z,x
z+1/2,-x+1/2,-y+1/2
z+1/2,-y+1/2,x+1/2
z+1/2,x+1/2,y+1/2
z+1/2,y+1/2,-x+1/2
z,-x,-y
z,-y,x
z,x,y
z,y,-x

#SG 212 P4_332 24
x,y,z
-x+1/2,-y,z+1/2
-x+1/4,-z+1/4,-y+1/4
-x+3/4,z+1/4,y+3/4
-x,y+1/2,-z+1/2
-y+1/2,-z,x+1/2
-y+1/4,-x+1/4,-z+1/4
-y+3/4,x+1/4,z+3/4
-y,z+1/2,-x+1/2
-z+1/2,-x,y+1/2
-z+1/4,-y+1/4,-x+1/4
-z+3/4,y+1/4,x+3/4
-z,x+1/2,-y+1/2
x+1/2,-y+1/2,-z
x+1/4,z+3/4,-y+3/4
x+3/4,-z+3/4,y+1/4
y+1/2,-z+1/2,-x
y+1/4,x+3/4,-z+3/4
y+3/4,-x+3/4,z+1/4
y,z,x
z+1/2,-x+1/2,-y
z+1/4,y+3/4,-x+3/4
z+3/4,-y+3/4,x+1/4
z,x,y

#SG 213 P4_132 24
x,y,z
-x+1/2,-y,z+1/2
-x+1/4,z+3/4,y+1/4
-x+3/4,-z+3/4,-y+3/4
-x,y+1/2,-z+1/2
-y+1/2,-z,x+1/2
-y+1/4,x+3/4,z+1/4
-y+3/4,-x+3/4,-z+3/4
-y,z+1/2,-x+1/2
-z+1/2,-x,y+1/2
-z+1/4,y+3/4,x+1/4
-z+3/4,-y+3/4,-x+3/4
-z,x+1/2,-y+1/2
x+1/2,-y+1/2,-z
x+1/4,-z+1/4,y+3/4
x+3/4,z+1/4,-y+1/4
y+1/2,-z+1/2,-x
y+1/4,-x+1/4,z+3/4
y+3/4,x+1/4,-z+1/4
y,z,x
z+1/2,-x+1/2,-y
z+1/4,-y+1/4,x+3/4
z+3/4,y+1/4,-x+1/4
z,x,y

#SG 214 I4_132 48
x,y,z
-x+1/2,-y,z+1/2
-x+1/2,y,-z
-x+1/4,-z+1/4,-y+1/4
-x+1/4,z+3/4,y+1/4
-x+3/4,-z+3/4,-y+3/4
-x+3/4,z+1/4,y+3/4
-x,-y+1/2,z
-x,y+1/2,-z+1/2
-y+1/2,-z,x+1/2
-y+1/2,z,-x
-y+1/4,-x+1/4,-z+1/4
-y+1/4,x+3/4,z+1/4
-y+3/4,-x+3/4,-z+3/4
-y+3/4,x+1/4,z+3/4
-y,-z+1/2,x
-y,z+1/2,-x+1/2
-z+1/2,-x,y+1/2
-z+1/2,x,-y
-z+1/4,-y+1/4,-x+1/4
-z+1/4,y+3/4,x+1/4
-z+3/4,-y+3/4,-x+3/4
-z+3/4,y+1/4,x+3/4
-z,-x+1/2,y
-z,x+1/2,-y+1/2
x+1/2,-y+1/2,-z
x+1/2,y+1/2,z+1/2
x+1/4,-z+1/4,y+3/4
x+1/4,z+3/4,-y+3/4
x+3/4,-z+3/4,y+1/4
x+3/4,z+1/4,-y+1/4
x,-y,-z+1/2
y+1/2,-z+1/2,-x
y+1/2,z+1/2,x+1/2
y+1/4,-x+1/4,z+3/4
y+1/4,x+3/4,-z+3/4
y+3/4,-x+3/4,z+1/4
y+3/4,x+1/4,-z+1/4
y,-z,-x+1/2
y,z,x
z+1/2,-x+1/2,-y
z+1/2,x+1/2,y+1/2
z+1/4,-y+1/4,x+3/4
z+1/4,y+3/4,-x+3/4
z+3/4,-y+3/4,x+1/4
z+3/4,y+1/4,-x+1/4
z,-x,-y+1/2
z,x,y

#SG 215 P-43m 24
x,y,z
-x,-y,z
-x,-z,y
-x,y,-z
-x,z,-y
-y,-x,z
-y,-z,x
-y,x,-z
-y,z,-x
-z,-x,y
-z,-y,x
-z,x,-y
-z,y,-x
x,-y,-z
x,-z,-y
x,z,y
y,-x,-z
y,-z,-x
y,x,z
y,z,x
z,-x,-y
z,-y,-x
z,x,y
z,y,x

#SG 216 F-43m 96
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,-y,z+1/2
-x+1/2,-z+1/2,y
-x+1/2,-z,y+1/2
-x+1/2,y+1/2,-z
-x+1/2,y,-z+1/2
-x+1/2,z+1/2,-y
-x+1/2,z,-y+1/2
-x,-y+1/2,z+1/2
-x,-y,z
-x,-z+1/2,y+1/2
-x,-z,y
-x,y+1/2,-z+1/2
-x,y,-z
-x,z+1/2,-y+1/2
-x,z,-y
-y+1/2,-x+1/2,z
-y+1/2,-x,z+1/2
-y+1/2,-z+1/2,x
-y+1/2,-z,x+1/2
-y+1/2,x+1/2,-z
-y+1/2,x,-z+1/2
-y+1/2,z+1/2,-x
-y+1/2,z,-x+1/2
-y,-x+1/2,z+1/2
-y,-x,z
-y,-z+1/2,x+1/2
-y,-z,x
-y,x+1/2,-z+1/2
-y,x,-z
-y,z+1/2,-x+1/2
-y,z,-x
-z+1/2,-x+1/2,y
-z+1/2,-x,y+1/2
-z+1/2,-y+1/2,x
-z+1/2,-y,x+1/2
-z+1/2,x+1/2,-y
-z+1/2,x,-y+1/2
-z+1/2,y+1/2,-x
-z+1/2,y,-x+1/2
-z,-x+1/2,y+1/2
-z,-x,y
-z,-y+1/2,x+1/2
-z,-y,x
-z,x+1/2,-y+1/2
-z,x,-y
-z,y+1/2,-x+1/2
-z,y,-x
x+1/2,-y+1/2,-z
x+1/2,-y,-z+1/2
x+1/2,-z+1/2,-y
x+1/2,-z,-y+1/2
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x+1/2,z+1/2,y
x+1/2,z,y+1/2
x,-y+1/2,-z+1/2
x,-y,-z
x,-z+1/2,-y+1/2
x,-z,-y
x,y+1/2,z+1/2
x,z+1/2,y+1/2
x,z,y
y+1/2,-x+1/2,-z
y+1/2,-x,-z+1/2
y+1/2,-z+1/2,-x
y+1/2,-z,-x+1/2
y+1/2,x+1/2,z
y+1/2,x,z+1/2
y+1/2,z+1/2,x
y+1/2,z,x+1/2
y,-x+1/2,-z+1/2
y,-x,-z
y,-z+1/2,-x+1/2
y,-z,-x
y,x+1/2,z+1/2
y,x,z
y,z+1/2,x+1/2
y,z,x
z+1/2,-x+1/2,-y
z+1/2,-x,-y+1/2
z+1/2,-y+1/2,-x
z+1/2,-y,-x+1/2
z+1/2,x+1/2,y
z+1/2,x,y+1/2
z+1/2,y+1/2,x
z+1/2,y,x+1/2
z,-x+1/2,-y+1/2
z,-x,-y
z,-y+1/2,-x+1/2
z,-y,-x
z,x+1/2,y+1/2
z,x,y
z,y+1/2,x+1/2
z,y,x

#SG 217 I-43m 48
x,y,z
-x+1/2,-y+1/2,z+1/2
-x+1/2,-z+1/2,y+1/2
-x+1/2,y+1/2,-z+1/2
-x+1/2,z+1/2,-y+1/2
-x,-y,z
-x,-z,y
-x,y,-z
-x,z,-y
-y+1/2,-x+1/2,z+1/2
-y+1/2,-z+1/2,x+1/2
-y+1/2,x+1/2,-z+1/2
-y+1/2,z+1/2,-x+1/2
-y,-x,z
-y,-z,x
-y,x,-z
-y,z,-x
-z+1/2,-x+1/2,y+1/2
-z+1/2,-y+1/2,x+1/2
-z+1/2,x+1/2,-y+1/2
-z+1/2,y+1/2,-x+1/2
-z,-x,y
-z,-y,x
-z,x,-y
-z,y,-x
x+1/2,-y+1/2,-z+1/2
x+1/2,-z+1/2,-y+1/2
x+1/2,y+1/2,z+1/2
x+1/2,z+1/2,y+1/2
x,-y,-z
x,-z,-y
x,z,y
y+1/2,-x+1/2,-z+1/2
y+1/2,-z+1/2,-x+1/2
y+1/2,x+1/2,z+1/2
y+1/2,z+1/2,x+1/2
y,-x,-z
y,-z,-x
y,x,z
y,z,x
z+1/2,-x+1/2,-y+1/2
z+1/2,-y+1/2,-x+1/2
z+1/2,x+1/2,y+1/2
z+1/2,y+1/2,x+1/2
z,-x,-y
z,-y,-x
z,x,y
z,y,x

#SG 218 P-43n 24
x,y,z
-x+1/2,-z+1/2,y+1/2
-x+1/2,z+1/2,-y+1/2
-x,-y,z
-x,y,-z
-y+1/2,-x+1/2,z+1/2
-y+1/2,x+1/2,-z+1/2
-y,-z,x
-y,z,-x
-z+1/2,-y+1/2,x+1/2
-z+1/2,y+1/2,-x+1/2
-z,-x,y
-z,x,-y
x+1/2,-z+1/2,-y+1/2
x+1/2,z+1/2,y+1/2
x,-y,-z
y+1/2,-x+1/2,-z+1/2
y+1/2,x+1/2,z+1/2
y,-z,-x
y,z,x
z+1/2,-y+1/2,-x+1/2
z+1/2,y+1/2,x+1/2
z,-x,-y
z,x,y

#SG 219 F-43c 96
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,-y,z+1/2
-x+1/2,-z+1/2,y+1/2
-x+1/2,-z,y
-x+1/2,y+1/2,-z
-x+1/2,y,-z+1/2
-x+1/2,z+1/2,-y+1/2
-x+1/2,z,-y
-x,-y+1/2,z+1/2
-x,-y,z
-x,-z+1/2,y
-x,-z,y+1/2
-x,y+1/2,-z+1/2
-x,y,-z
-x,z+1/2,-y
-x,z,-y+1/2
-y+1/2,-x+1/2,z+1/2
-y+1/2,-x,z
-y+1/2,-z+1/2,x
-y+1/2,-z,x+1/2
-y+1/2,x+1/2,-z+1/2
-y+1/2,x,-z
-y+1/2,z+1/2,-x
-y+1/2,z,-x+1/2
-y,-x+1/2,z
-y,-x,z+1/2
-y,-z+1/2,x+1/2
-y,-z,x
-y,x+1/2,-z
-y,x,-z+1/2
-y,z+1/2,-x+1/2
-y,z,-x
-z+1/2,-x+1/2,y
-z+1/2,-x,y+1/2
-z+1/2,-y+1/2,x+1/2
-z+1/2,-y,x
-z+1/2,x+1/2,-y
-z+1/2,x,-y+1/2
-z+1/2,y+1/2,-x+1/2
-z+1/2,y,-x
-z,-x+1/2,y+1/2
-z,-x,y
-z,-y+1/2,x
-z,-y,x+1/2
-z,x+1/2,-y+1/2
-z,x,-y
-z,y+1/2,-x
-z,y,-x+1/2
x+1/2,-y+1/2,-z
x+1/2,-y,-z+1/2
x+1/2,-z+1/2,-y+1/2
x+1/2,-z,-y
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x+1/2,z+1/2,y+1/2
x+1/2,z,y
x,-y+1/2,-z+1/2
x,-y,-z
x,-z+1/2,-y
x,-z,-y+1/2
x,y+1/2,z+1/2
x,z+1/2,y
x,z,y+1/2
y+1/2,-x+1/2,-z+1/2
y+1/2,-x,-z
y+1/2,-z+1/2,-x
y+1/2,-z,-x+1/2
y+1/2,x+1/2,z+1/2
y+1/2,x,z
y+1/2,z+1/2,x
y+1/2,z,x+1/2
y,-x+1/2,-z
y,-x,-z+1/2
y,-z+1/2,-x+1/2
y,-z,-x
y,x+1/2,z
y,x,z+1/2
y,z+1/2,x+1/2
y,z,x
z+1/2,-x+1/2,-y
z+1/2,-x,-y+1/2
z+1/2,-y+1/2,-x+1/2
z+1/2,-y,-x
z+1/2,x+1/2,y
z+1/2,x,y+1/2
z+1/2,y+1/2,x+1/2
z+1/2,y,x
z,-x+1/2,-y+1/2
z,-x,-y
z,-y+1/2,-x
z,-y,-x+1/2
z,x+1/2,y+1/2
z,x,y
z,y+1/2,x
z,y,x+1/2

#SG 220 I-43d 48
x,y,z
-x+1/2,-y,z+1/2
-x+1/2,y,-z
-x+1/4,-z+3/4,y+3/4
-x+1/4,z+1/4,-y+3/4
-x+3/4,-z+1/4,y+1/4
-x+3/4,z+3/4,-y+1/4
-x,-y+1/2,z
-x,y+1/2,-z+1/2
-y+1/2,-z,x+1/2
-y+1/2,z,-x
-y+1/4,-x+3/4,z+3/4
-y+1/4,x+1/4,-z+3/4
-y+3/4,-x+1/4,z+1/4
-y+3/4,x+3/4,-z+1/4
-y,-z+1/2,x
-y,z+1/2,-x+1/2
-z+1/2,-x,y+1/2
-z+1/2,x,-y
-z+1/4,-y+3/4,x+3/4
-z+1/4,y+1/4,-x+3/4
-z+3/4,-y+1/4,x+1/4
-z+3/4,y+3/4,-x+1/4
-z,-x+1/2,y
-z,x+1/2,-y+1/2
x+1/2,-y+1/2,-z
x+1/2,y+1/2,z+1/2
x+1/4,-z+3/4,-y+1/4
x+1/4,z+1/4,y+1/4
x+3/4,-z+1/4,-y+3/4
x+3/4,z+3/4,y+3/4
x,-y,-z+1/2
y+1/2,-z+1/2,-x
y+1/2,z+1/2,x+1/2
y+1/4,-x+3/4,-z+1/4
y+1/4,x+1/4,z+1/4
y+3/4,-x+1/4,-z+3/4
y+3/4,x+3/4,z+3/4
y,-z,-x+1/2
y,z,x
z+1/2,-x+1/2,-y
z+1/2,x+1/2,y+1/2
z+1/4,-y+3/4,-x+1/4
z+1/4,y+1/4,x+1/4
z+3/4,-y+1/4,-x+3/4
z+3/4,y+3/4,x+3/4
z,-x,-y+1/2
z,x,y

#SG 221 Pm-3m 48
x,y,z
-x,-y,-z
-x,-y,z
-x,-z,-y
-x,-z,y
-x,y,-z
-x,y,z
-x,z,-y
-x,z,y
-y,-x,-z
-y,-x,z
-y,-z,-x
-y,-z,x
-y,x,-z
-y,x,z
-y,z,-x
-y,z,x
-z,-x,-y
-z,-x,y
-z,-y,-x
-z,-y,x
-z,x,-y
-z,x,y
-z,y,-x
-z,y,x
x,-y,-z
x,-y,z
x,-z,-y
x,-z,y
x,y,-z
x,z,-y
x,z,y
y,-x,-z
y,-x,z
y,-z,-x
y,-z,x
y,x,-z
y,x,z
y,z,-x
y,z,x
z,-x,-y
z,-x,y
z,-y,-x
z,-y,x
z,x,-y
z,x,y
z,y,-x
z,y,x

#SG 222 Pn-3n 48
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,-z+1/2,-y+1/2
-x+1/2,y,-z+1/2
-x+1/2,z,y
-x,-y,-z
-x,-z,y+1/2
-x,y+1/2,z+1/2
-x,z+1/2,-y
-y+1/2,-x+1/2,-z+1/2
-y+1/2,-z+1/2,x
-y+1/2,x,z
-y+1/2,z,-x+1/2
-y,-x,z+1/2
-y,-z,-x
-y,x+1/2,-z
-y,z+1/2,x+1/2
-z+1/2,-x+1/2,y
-z+1/2,-y+1/2,-x+1/2
-z+1/2,x,-y+1/2
-z+1/2,y,x
-z,-x,-y
-z,-y,x+1/2
-z,x+1/2,y+1/2
-z,y+1/2,-x
x+1/2,-y,z+1/2
x+1/2,-z,-y
x+1/2,y+1/2,-z
x+1/2,z+1/2,y+1/2
x,-y+1/2,-z+1/2
x,-z+1/2,y
x,z,-y+1/2
y+1/2,-x,-z
y+1/2,-z,x+1/2
y+1/2,x+1/2,z+1/2
y+1/2,z+1/2,-x
y,-x+1/2,z
y,-z+1/2,-x+1/2
y,x,-z+1/2
y,z,x
z+1/2,-x,y+1/2
z+1/2,-y,-x
z+1/2,x+1/2,-y
z+1/2,y+1/2,x+1/2
z,-x+1/2,-y+1/2
z,-y+1/2,x
z,x,y
z,y,-x+1/2

#SG 223 Pm-3n 48
x,y,z
-x+1/2,-z+1/2,-y+1/2
-x+1/2,-z+1/2,y+1/2
-x+1/2,z+1/2,-y+1/2
-x+1/2,z+1/2,y+1/2
-x,-y,-z
-x,-y,z
-x,y,-z
-x,y,z
-y+1/2,-x+1/2,-z+1/2
-y+1/2,-x+1/2,z+1/2
-y+1/2,x+1/2,-z+1/2
-y+1/2,x+1/2,z+1/2
-y,-z,-x
-y,-z,x
-y,z,-x
-y,z,x
-z+1/2,-y+1/2,-x+1/2
-z+1/2,-y+1/2,x+1/2
-z+1/2,y+1/2,-x+1/2
-z+1/2,y+1/2,x+1/2
-z,-x,-y
-z,-x,y
-z,x,-y
-z,x,y
x+1/2,-z+1/2,-y+1/2
x+1/2,-z+1/2,y+1/2
x+1/2,z+1/2,-y+1/2
x+1/2,z+1/2,y+1/2
x,-y,-z
x,-y,z
x,y,-z
y+1/2,-x+1/2,-z+1/2
y+1/2,-x+1/2,z+1/2
y+1/2,x+1/2,-z+1/2
y+1/2,x+1/2,z+1/2
y,-z,-x
y,-z,x
y,z,-x
y,z,x
z+1/2,-y+1/2,-x+1/2
z+1/2,-y+1/2,x+1/2
z+1/2,y+1/2,-x+1/2
z+1/2,y+1/2,x+1/2
z,-x,-y
z,-x,y
z,x,-y
z,x,y

#SG 224 Pn-3m 48
x,y,z
-x+1/2,-y+1/2,z
-x+1/2,-z+1/2,y
-x+1/2,y,-z+1/2
-x+1/2,z,-y+1/2
-x,-y,-z
-x,-z,-y
-x,y+1/2,z+1/2
-x,z+1/2,y+1/2
-y+1/2,-x+1/2,z
-y+1/2,-z+1/2,x
-y+1/2,x,-z+1/2
-y+1/2,z,-x+1/2
-y,-x,-z
-y,-z,-x
-y,x+1/2,z+1/2
-y,z+1/2,x+1/2
-z+1/2,-x+1/2,y
-z+1/2,-y+1/2,x
-z+1/2,x,-y+1/2
-z+1/2,y,-x+1/2
-z,-x,-y
-z,-y,-x
-z,x+1/2,y+1/2
-z,y+1/2,x+1/2
x+1/2,-y,z+1/2
x+1/2,-z,y+1/2
x+1/2,y+1/2,-z
x+1/2,z+1/2,-y
x,-y+1/2,-z+1/2
x,-z+1/2,-y+1/2
x,z,y
y+1/2,-x,z+1/2
y+1/2,-z,x+1/2
y+1/2,x+1/2,-z
y+1/2,z+1/2,-x
y,-x+1/2,-z+1/2
y,-z+1/2,-x+1/2
y,x,z
y,z,x
z+1/2,-x,y+1/2
z+1/2,-y,x+1/2
z+1/2,x+1/2,-y
z+1/2,y+1/2,-x
z,-x+1/2,-y+1/2
z,-y+1/2,-x+1/2
z,x,y
z,y,x

#SG 225 Fm-3m 192
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y+1/2,z
-x+1/2,-y,-z+1/2
-x+1/2,-y,z+1/2
-x+1/2,-z+1/2,-y
-x+1/2,-z+1/2,y
-x+1/2,-z,-y+1/2
-x+1/2,-z,y+1/2
-x+1/2,y+1/2,-z
-x+1/2,y+1/2,z
-x+1/2,y,-z+1/2
-x+1/2,y,z+1/2
-x+1/2,z+1/2,-y
-x+1/2,z+1/2,y
-x+1/2,z,-y+1/2
-x+1/2,z,y+1/2
-x,-y+1/2,-z+1/2
-x,-y+1/2,z+1/2
-x,-y,-z
-x,-y,z
-x,-z+1/2,-y+1/2
-x,-z+1/2,y+1/2
-x,-z,-y
-x,-z,y
-x,y+1/2,-z+1/2
-x,y+1/2,z+1/2
-x,y,-z
-x,y,z
-x,z+1/2,-y+1/2
-x,z+1/2,y+1/2
-x,z,-y
-x,z,y
-y+1/2,-x+1/2,-z
-y+1/2,-x+1/2,z
-y+1/2,-x,-z+1/2
-y+1/2,-x,z+1/2
-y+1/2,-z+1/2,-x
-y+1/2,-z+1/2,x
-y+1/2,-z,-x+1/2
-y+1/2,-z,x+1/2
-y+1/2,x+1/2,-z
-y+1/2,x+1/2,z
-y+1/2,x,-z+1/2
-y+1/2,x,z+1/2
-y+1/2,z+1/2,-x
-y+1/2,z+1/2,x
-y+1/2,z,-x+1/2
-y+1/2,z,x+1/2
-y,-x+1/2,-z+1/2
-y,-x+1/2,z+1/2
-y,-x,-z
-y,-x,z
-y,-z+1/2,-x+1/2
-y,-z+1/2,x+1/2
-y,-z,-x
-y,-z,x
-y,x+1/2,-z+1/2
-y,x+1/2,z+1/2
-y,x,-z
-y,x,z
-y,z+1/2,-x+1/2
-y,z+1/2,x+1/2
-y,z,-x
-y,z,x
-z+1/2,-x+1/2,-y
-z+1/2,-x+1/2,y
-z+1/2,-x,-y+1/2
-z+1/2,-x,y+1/2
-z+1/2,-y+1/2,-x
-z+1/2,-y+1/2,x
-z+1/2,-y,-x+1/2
-z+1/2,-y,x+1/2
-z+1/2,x+1/2,-y
-z+1/2,x+1/2,y
-z+1/2,x,-y+1/2
-z+1/2,x,y+1/2
-z+1/2,y+1/2,-x
-z+1/2,y+1/2,x
-z+1/2,y,-x+1/2
-z+1/2,y,x+1/2
-z,-x+1/2,-y+1/2
-z,-x+1/2,y+1/2
-z,-x,-y
-z,-x,y
-z,-y+1/2,-x+1/2
-z,-y+1/2,x+1/2
-z,-y,-x
-z,-y,x
-z,x+1/2,-y+1/2
-z,x+1/2,y+1/2
-z,x,-y
-z,x,y
-z,y+1/2,-x+1/2
-z,y+1/2,x+1/2
-z,y,-x
-z,y,x
x+1/2,-y+1/2,-z
x+1/2,-y+1/2,z
x+1/2,-y,-z+1/2
x+1/2,-y,z+1/2
x+1/2,-z+1/2,-y
x+1/2,-z+1/2,y
x+1/2,-z,-y+1/2
x+1/2,-z,y+1/2
x+1/2,y+1/2,-z
x+1/2,y+1/2,z
x+1/2,y,-z+1/2
x+1/2,y,z+1/2
x+1/2,z+1/2,-y
x+1/2,z+1/2,y
x+1/2,z,-y+1/2
x+1/2,z,y+1/2
x,-y+1/2,-z+1/2
x,-y+1/2,z+1/2
x,-y,-z
x,-y,z
x,-z+1/2,-y+1/2
x,-z+1/2,y+1/2
x,-z,-y
x,-z,y
x,y+1/2,-z+1/2
x,y+1/2,z+1/2
x,y,-z
x,z+1/2,-y+1/2
x,z+1/2,y+1/2
x,z,-y
x,z,y
y+1/2,-x+1/2,-z
y+1/2,-x+1/2,z
y+1/2,-x,-z+1/2
y+1/2,-x,z+1/2
y+1/2,-z+1/2,-x
y+1/2,-z+1/2,x
y+1/2,-z,-x+1/2
y+1/2,-z,x+1/2
y+1/2,x+1/2,-z
y+1/2,x+1/2,z
y+1/2,x,-z+1/2
y+1/2,x,z+1/2
y+1/2,z+1/2,-x
y+1/2,z+1/2,x
y+1/2,z,-x+1/2
y+1/2,z,x+1/2
y,-x+1/2,-z+1/2
y,-x+1/2,z+1/2
y,-x,-z
y,-x,z
y,-z+1/2,-x+1/2
y,-z+1/2,x+1/2
y,-z,-x
y,-z,x
y,x+1/2,-z+1/2
y,x+1/2,z+1/2
y,x,-z
y,x,z
y,z+1/2,-x+1/2
y,z+1/2,x+1/2
y,z,-x
y,z,x
z+1/2,-x+1/2,-y
z+1/2,-x+1/2,y
z+1/2,-x,-y+1/2
z+1/2,-x,y+1/2
z+1/2,-y+1/2,-x
z+1/2,-y+1/2,x
z+1/2,-y,-x+1/2
z+1/2,-y,x+1/2
z+1/2,x+1/2,-y
z+1/2,x+1/2,y
z+1/2,x,-y+1/2
z+1/2,x,y+1/2
z+1/2,y+1/2,-x
z+1/2,y+1/2,x
z+1/2,y,-x+1/2
z+1/2,y,x+1/2
z,-x+1/2,-y+1/2
z,-x+1/2,y+1/2
z,-x,-y
z,-x,y
z,-y+1/2,-x+1/2
z,-y+1/2,x+1/2
z,-y,-x
z,-y,x
z,x+1/2,-y+1/2
z,x+1/2,y+1/2
z,x,-y
z,x,y
z,y+1/2,-x+1/2
z,y+1/2,x+1/2
z,y,-x
z,y,x

#SG 226 Fm-3c 192
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y+1/2,z
-x+1/2,-y,-z+1/2
-x+1/2,-y,z+1/2
-x+1/2,-z+1/2,-y+1/2
-x+1/2,-z+1/2,y+1/2
-x+1/2,-z,-y
-x+1/2,-z,y
-x+1/2,y+1/2,-z
-x+1/2,y+1/2,z
-x+1/2,y,-z+1/2
-x+1/2,y,z+1/2
-x+1/2,z+1/2,-y+1/2
-x+1/2,z+1/2,y+1/2
-x+1/2,z,-y
-x+1/2,z,y
-x,-y+1/2,-z+1/2
-x,-y+1/2,z+1/2
-x,-y,-z
-x,-y,z
-x,-z+1/2,-y
-x,-z+1/2,y
-x,-z,-y+1/2
-x,-z,y+1/2
-x,y+1/2,-z+1/2
-x,y+1/2,z+1/2
-x,y,-z
-x,y,z
-x,z+1/2,-y
-x,z+1/2,y
-x,z,-y+1/2
-x,z,y+1/2
-y+1/2,-x+1/2,-z+1/2
-y+1/2,-x+1/2,z+1/2
-y+1/2,-x,-z
-y+1/2,-x,z
-y+1/2,-z+1/2,-x
-y+1/2,-z+1/2,x
-y+1/2,-z,-x+1/2
-y+1/2,-z,x+1/2
-y+1/2,x+1/2,-z+1/2
-y+1/2,x+1/2,z+1/2
-y+1/2,x,-z
-y+1/2,x,z
-y+1/2,z+1/2,-x
-y+1/2,z+1/2,x
-y+1/2,z,-x+1/2
-y+1/2,z,x+1/2
-y,-x+1/2,-z
-y,-x+1/2,z
-y,-x,-z+1/2
-y,-x,z+1/2
-y,-z+1/2,-x+1/2
-y,-z+1/2,x+1/2
-y,-z,-x
-y,-z,x
-y,x+1/2,-z
-y,x+1/2,z
-y,x,-z+1/2
-y,x,z+1/2
-y,z+1/2,-x+1/2
-y,z+1/2,x+1/2
-y,z,-x
-y,z,x
-z+1/2,-x+1/2,-y
-z+1/2,-x+1/2,y
-z+1/2,-x,-y+1/2
-z+1/2,-x,y+1/2
-z+1/2,-y+1/2,-x+1/2
-z+1/2,-y+1/2,x+1/2
-z+1/2,-y,-x
-z+1/2,-y,x
-z+1/2,x+1/2,-y
-z+1/2,x+1/2,y
-z+1/2,x,-y+1/2
-z+1/2,x,y+1/2
-z+1/2,y+1/2,-x+1/2
-z+1/2,y+1/2,x+1/2
-z+1/2,y,-x
-z+1/2,y,x
-z,-x+1/2,-y+1/2
-z,-x+1/2,y+1/2
-z,-x,-y
-z,-x,y
-z,-y+1/2,-x
-z,-y+1/2,x
-z,-y,-x+1/2
-z,-y,x+1/2
-z,x+1/2,-y+1/2
-z,x+1/2,y+1/2
-z,x,-y
-z,x,y
-z,y+1/2,-x
-z,y+1/2,x
-z,y,-x+1/2
-z,y,x+1/2
x+1/2,-y+1/2,-z
x+1/2,-y+1/2,z
x+1/2,-y,-z+1/2
x+1/2,-y,z+1/2
x+1/2,-z+1/2,-y+1/2
x+1/2,-z+1/2,y+1/2
x+1/2,-z,-y
x+1/2,-z,y
x+1/2,y+1/2,-z
x+1/2,y+1/2,z
x+1/2,y,-z+1/2
x+1/2,y,z+1/2
x+1/2,z+1/2,-y+1/2
x+1/2,z+1/2,y+1/2
x+1/2,z,-y
x+1/2,z,y
x,-y+1/2,-z+1/2
x,-y+1/2,z+1/2
x,-y,-z
x,-y,z
x,-z+1/2,-y
x,-z+1/2,y
x,-z,-y+1/2
x,-z,y+1/2
x,y+1/2,-z+1/2
x,y+1/2,z+1/2
x,y,-z
x,z+1/2,-y
x,z+1/2,y
x,z,-y+1/2
x,z,y+1/2
y+1/2,-x+1/2,-z+1/2
y+1/2,-x+1/2,z+1/2
y+1/2,-x,-z
y+1/2,-x,z
y+1/2,-z+1/2,-x
y+1/2,-z+1/2,x
y+1/2,-z,-x+1/2
y+1/2,-z,x+1/2
y+1/2,x+1/2,-z+1/2
y+1/2,x+1/2,z+1/2
y+1/2,x,-z
y+1/2,x,z
y+1/2,z+1/2,-x
y+1/2,z+1/2,x
y+1/2,z,-x+1/2
y+1/2,z,x+1/2
y,-x+1/2,-z
y,-x+1/2,z
y,-x,-z+1/2
y,-x,z+1/2
y,-z+1/2,-x+1/2
y,-z+1/2,x+1/2
y,-z,-x
y,-z,x
y,x+1/2,-z
y,x+1/2,z
y,x,-z+1/2
y,x,z+1/2
y,z+1/2,-x+1/2
y,z+1/2,x+1/2
y,z,-x
y,z,x
z+1/2,-x+1/2,-y
z+1/2,-x+1/2,y
z+1/2,-x,-y+1/2
z+1/2,-x,y+1/2
z+1/2,-y+1/2,-x+1/2
z+1/2,-y+1/2,x+1/2
z+1/2,-y,-x
z+1/2,-y,x
z+1/2,x+1/2,-y
z+1/2,x+1/2,y
z+1/2,x,-y+1/2
z+1/2,x,y+1/2
z+1/2,y+1/2,-x+1/2
z+1/2,y+1/2,x+1/2
z+1/2,y,-x
z+1/2,y,x
z,-x+1/2,-y+1/2
z,-x+1/2,y+1/2
z,-x,-y
z,-x,y
z,-y+1/2,-x
z,-y+1/2,x
z,-y,-x+1/2
z,-y,x+1/2
z,x+1/2,-y+1/2
z,x+1/2,y+1/2
z,x,-y
z,x,y
z,y+1/2,-x
z,y+1/2,x
z,y,-x+1/2
z,y,x+1/2

#SG 227 Fd-3m 192
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y,-z+1/2
-x+1/2,-z+1/2,-y
-x+1/2,-z,-y+1/2
-x+1/2,y+1/4,z+3/4
-x+1/2,y+3/4,z+1/4
-x+1/2,z+1/4,y+3/4
-x+1/2,z+3/4,y+1/4
-x+1/4,-y+1/4,z
-x+1/4,-y+3/4,z+1/2
-x+1/4,-z+1/4,y
-x+1/4,-z+3/4,y+1/2
-x+1/4,y+1/2,-z+3/4
-x+1/4,y,-z+1/4
-x+1/4,z+1/2,-y+3/4
-x+1/4,z,-y+1/4
-x+3/4,-y+1/4,z+1/2
-x+3/4,-y+3/4,z
-x+3/4,-z+1/4,y+1/2
-x+3/4,-z+3/4,y
-x+3/4,y+1/2,-z+1/4
-x+3/4,y,-z+3/4
-x+3/4,z+1/2,-y+1/4
-x+3/4,z,-y+3/4
-x,-y+1/2,-z+1/2
-x,-y,-z
-x,-z+1/2,-y+1/2
-x,-z,-y
-x,y+1/4,z+1/4
-x,y+3/4,z+3/4
-x,z+1/4,y+1/4
-x,z+3/4,y+3/4
-y+1/2,-x+1/2,-z
-y+1/2,-x,-z+1/2
-y+1/2,-z+1/2,-x
-y+1/2,-z,-x+1/2
-y+1/2,x+1/4,z+3/4
-y+1/2,x+3/4,z+1/4
-y+1/2,z+1/4,x+3/4
-y+1/2,z+3/4,x+1/4
-y+1/4,-x+1/4,z
-y+1/4,-x+3/4,z+1/2
-y+1/4,-z+1/4,x
-y+1/4,-z+3/4,x+1/2
-y+1/4,x+1/2,-z+3/4
-y+1/4,x,-z+1/4
-y+1/4,z+1/2,-x+3/4
-y+1/4,z,-x+1/4
-y+3/4,-x+1/4,z+1/2
-y+3/4,-x+3/4,z
-y+3/4,-z+1/4,x+1/2
-y+3/4,-z+3/4,x
-y+3/4,x+1/2,-z+1/4
-y+3/4,x,-z+3/4
-y+3/4,z+1/2,-x+1/4
-y+3/4,z,-x+3/4
-y,-x+1/2,-z+1/2
-y,-x,-z
-y,-z+1/2,-x+1/2
-y,-z,-x
-y,x+1/4,z+1/4
-y,x+3/4,z+3/4
-y,z+1/4,x+1/4
-y,z+3/4,x+3/4
-z+1/2,-x+1/2,-y
-z+1/2,-x,-y+1/2
-z+1/2,-y+1/2,-x
-z+1/2,-y,-x+1/2
-z+1/2,x+1/4,y+3/4
-z+1/2,x+3/4,y+1/4
-z+1/2,y+1/4,x+3/4
-z+1/2,y+3/4,x+1/4
-z+1/4,-x+1/4,y
-z+1/4,-x+3/4,y+1/2
-z+1/4,-y+1/4,x
-z+1/4,-y+3/4,x+1/2
-z+1/4,x+1/2,-y+3/4
-z+1/4,x,-y+1/4
-z+1/4,y+1/2,-x+3/4
-z+1/4,y,-x+1/4
-z+3/4,-x+1/4,y+1/2
-z+3/4,-x+3/4,y
-z+3/4,-y+1/4,x+1/2
-z+3/4,-y+3/4,x
-z+3/4,x+1/2,-y+1/4
-z+3/4,x,-y+3/4
-z+3/4,y+1/2,-x+1/4
-z+3/4,y,-x+3/4
-z,-x+1/2,-y+1/2
-z,-x,-y
-z,-y+1/2,-x+1/2
-z,-y,-x
-z,x+1/4,y+1/4
-z,x+3/4,y+3/4
-z,y+1/4,x+1/4
-z,y+3/4,x+3/4
x+1/2,-y+1/4,-z+3/4
x+1/2,-y+3/4,-z+1/4
x+1/2,-z+1/4,-y+3/4
x+1/2,-z+3/4,-y+1/4
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x+1/2,z+1/2,y
x+1/2,z,y+1/2
x+1/4,-y+1/2,z+3/4
x+1/4,-y,z+1/4
x+1/4,-z+1/2,y+3/4
x+1/4,-z,y+1/4
x+1/4,y+1/4,-z
x+1/4,y+3/4,-z+1/2
x+1/4,z+1/4,-y
x+1/4,z+3/4,-y+1/2
x+3/4,-y+1/2,z+1/4
x+3/4,-y,z+3/4
x+3/4,-z+1/2,y+1/4
x+3/4,-z,y+3/4
x+3/4,y+1/4,-z+1/2
x+3/4,y+3/4,-z
x+3/4,z+1/4,-y+1/2
x+3/4,z+3/4,-y
x,-y+1/4,-z+1/4
x,-y+3/4,-z+3/4
x,-z+1/4,-y+1/4
x,-z+3/4,-y+3/4
x,y+1/2,z+1/2
x,z+1/2,y+1/2
x,z,y
y+1/2,-x+1/4,-z+3/4
y+1/2,-x+3/4,-z+1/4
y+1/2,-z+1/4,-x+3/4
y+1/2,-z+3/4,-x+1/4
y+1/2,x+1/2,z
y+1/2,x,z+1/2
y+1/2,z+1/2,x
y+1/2,z,x+1/2
y+1/4,-x+1/2,z+3/4
y+1/4,-x,z+1/4
y+1/4,-z+1/2,x+3/4
y+1/4,-z,x+1/4
y+1/4,x+1/4,-z
y+1/4,x+3/4,-z+1/2
y+1/4,z+1/4,-x
y+1/4,z+3/4,-x+1/2
y+3/4,-x+1/2,z+1/4
y+3/4,-x,z+3/4
y+3/4,-z+1/2,x+1/4
y+3/4,-z,x+3/4
y+3/4,x+1/4,-z+1/2
y+3/4,x+3/4,-z
y+3/4,z+1/4,-x+1/2
y+3/4,z+3/4,-x
y,-x+1/4,-z+1/4
y,-x+3/4,-z+3/4
y,-z+1/4,-x+1/4
y,-z+3/4,-x+3/4
y,x+1/2,z+1/2
y,x,z
y,z+1/2,x+1/2
y,z,x
z+1/2,-x+1/4,-y+3/4
z+1/2,-x+3/4,-y+1/4
z+1/2,-y+1/4,-x+3/4
z+1/2,-y+3/4,-x+1/4
z+1/2,x+1/2,y
z+1/2,x,y+1/2
z+1/2,y+1/2,x
z+1/2,y,x+1/2
z+1/4,-x+1/2,y+3/4
z+1/4,-x,y+1/4
z+1/4,-y+1/2,x+3/4
z+1/4,-y,x+1/4
z+1/4,x+1/4,-y
z+1/4,x+3/4,-y+1/2
z+1/4,y+1/4,-x
z+1/4,y+3/4,-x+1/2
z+3/4,-x+1/2,y+1/4
z+3/4,-x,y+3/4
z+3/4,-y+1/2,x+1/4
z+3/4,-y,x+3/4
z+3/4,x+1/4,-y+1/2
z+3/4,x+3/4,-y
z+3/4,y+1/4,-x+1/2
z+3/4,y+3/4,-x
z,-x+1/4,-y+1/4
z,-x+3/4,-y+3/4
z,-y+1/4,-x+1/4
z,-y+3/4,-x+3/4
z,x+1/2,y+1/2
z,x,y
z,y+1/2,x+1/2
z,y,x

#SG 228 Fd-3c 192
x,y,z
-x+1/2,-y+1/2,-z
-x+1/2,-y,-z+1/2
-x+1/2,-z+1/2,-y+1/2
-x+1/2,-z,-y
-x+1/2,y+1/4,z+3/4
-x+1/2,y+3/4,z+1/4
-x+1/2,z+1/4,y+1/4
-x+1/2,z+3/4,y+3/4
-x+1/4,-y+1/4,z
-x+1/4,-y+3/4,z+1/2
-x+1/4,-z+1/4,y+1/2
-x+1/4,-z+3/4,y
-x+1/4,y+1/2,-z+3/4
-x+1/4,y,-z+1/4
-x+1/4,z+1/2,-y+1/4
-x+1/4,z,-y+3/4
-x+3/4,-y+1/4,z+1/2
-x+3/4,-y+3/4,z
-x+3/4,-z+1/4,y
-x+3/4,-z+3/4,y+1/2
-x+3/4,y+1/2,-z+1/4
-x+3/4,y,-z+3/4
-x+3/4,z+1/2,-y+3/4
-x+3/4,z,-y+1/4
-x,-y+1/2,-z+1/2
-x,-y,-z
-x,-z+1/2,-y
-x,-z,-y+1/2
-x,y+1/4,z+1/4
-x,y+3/4,z+3/4
-x,z+1/4,y+3/4
-x,z+3/4,y+1/4
-y+1/2,-x+1/2,-z+1/2
-y+1/2,-x,-z
-y+1/2,-z+1/2,-x
-y+1/2,-z,-x+1/2
-y+1/2,x+1/4,z+1/4
-y+1/2,x+3/4,z+3/4
-y+1/2,z+1/4,x+3/4
-y+1/2,z+3/4,x+1/4
-y+1/4,-x+1/4,z+1/2
-y+1/4,-x+3/4,z
-y+1/4,-z+1/4,x
-y+1/4,-z+3/4,x+1/2
-y+1/4,x+1/2,-z+1/4
-y+1/4,x,-z+3/4
-y+1/4,z+1/2,-x+3/4
-y+1/4,z,-x+1/4
-y+3/4,-x+1/4,z
-y+3/4,-x+3/4,z+1/2
-y+3/4,-z+1/4,x+1/2
-y+3/4,-z+3/4,x
-y+3/4,x+1/2,-z+3/4
-y+3/4,x,-z+1/4
-y+3/4,z+1/2,-x+1/4
-y+3/4,z,-x+3/4
-y,-x+1/2,-z
-y,-x,-z+1/2
-y,-z+1/2,-x+1/2
-y,-z,-x
-y,x+1/4,z+3/4
-y,x+3/4,z+1/4
-y,z+1/4,x+1/4
-y,z+3/4,x+3/4
-z+1/2,-x+1/2,-y
-z+1/2,-x,-y+1/2
-z+1/2,-y+1/2,-x+1/2
-z+1/2,-y,-x
-z+1/2,x+1/4,y+3/4
-z+1/2,x+3/4,y+1/4
-z+1/2,y+1/4,x+1/4
-z+1/2,y+3/4,x+3/4
-z+1/4,-x+1/4,y
-z+1/4,-x+3/4,y+1/2
-z+1/4,-y+1/4,x+1/2
-z+1/4,-y+3/4,x
-z+1/4,x+1/2,-y+3/4
-z+1/4,x,-y+1/4
-z+1/4,y+1/2,-x+1/4
-z+1/4,y,-x+3/4
-z+3/4,-x+1/4,y+1/2
-z+3/4,-x+3/4,y
-z+3/4,-y+1/4,x
-z+3/4,-y+3/4,x+1/2
-z+3/4,x+1/2,-y+1/4
-z+3/4,x,-y+3/4
-z+3/4,y+1/2,-x+3/4
-z+3/4,y,-x+1/4
-z,-x+1/2,-y+1/2
-z,-x,-y
-z,-y+1/2,-x
-z,-y,-x+1/2
-z,x+1/4,y+1/4
-z,x+3/4,y+3/4
-z,y+1/4,x+3/4
-z,y+3/4,x+1/4
x+1/2,-y+1/4,-z+3/4
x+1/2,-y+3/4,-z+1/4
x+1/2,-z+1/4,-y+1/4
x+1/2,-z+3/4,-y+3/4
x+1/2,y+1/2,z
x+1/2,y,z+1/2
x+1/2,z+1/2,y+1/2
x+1/2,z,y
x+1/4,-y+1/2,z+3/4
x+1/4,-y,z+1/4
x+1/4,-z+1/2,y+1/4
x+1/4,-z,y+3/4
x+1/4,y+1/4,-z
x+1/4,y+3/4,-z+1/2
x+1/4,z+1/4,-y+1/2
x+1/4,z+3/4,-y
x+3/4,-y+1/2,z+1/4
x+3/4,-y,z+3/4
x+3/4,-z+1/2,y+3/4
x+3/4,-z,y+1/4
x+3/4,y+1/4,-z+1/2
x+3/4,y+3/4,-z
x+3/4,z+1/4,-y
x+3/4,z+3/4,-y+1/2
x,-y+1/4,-z+1/4
x,-y+3/4,-z+3/4
x,-z+1/4,-y+3/4
x,-z+3/4,-y+1/4
x,y+1/2,z+1/2
x,z+1/2,y
x,z,y+1/2
y+1/2,-x+1/4,-z+1/4
y+1/2,-x+3/4,-z+3/4
y+1/2,-z+1/4,-x+3/4
y+1/2,-z+3/4,-x+1/4
y+1/2,x+1/2,z+1/2
y+1/2,x,z
y+1/2,z+1/2,x
y+1/2,z,x+1/2
y+1/4,-x+1/2,z+1/4
y+1/4,-x,z+3/4
y+1/4,-z+1/2,x+3/4
y+1/4,-z,x+1/4
y+1/4,x+1/4,-z+1/2
y+1/4,x+3/4,-z
y+1/4,z+1/4,-x
y+1/4,z+3/4,-x+1/2
y+3/4,-x+1/2,z+3/4
y+3/4,-x,z+1/4
y+3/4,-z+1/2,x+1/4
y+3/4,-z,x+3/4
y+3/4,x+1/4,-z
y+3/4,x+3/4,-z+1/2
y+3/4,z+1/4,-x+1/2
y+3/4,z+3/4,-x
y,-x+1/4,-z+3/4
y,-x+3/4,-z+1/4
y,-z+1/4,-x+1/4
y,-z+3/4,-x+3/4
y,x+1/2,z
y,x,z+1/2
y,z+1/2,x+1/2
y,z,x
z+1/2,-x+1/4,-y+3/4
z+1/2,-x+3/4,-y+1/4
z+1/2,-y+1/4,-x+1/4
z+1/2,-y+3/4,-x+3/4
z+1/2,x+1/2,y
z+1/2,x,y+1/2
z+1/2,y+1/2,x+1/2
z+1/2,y,x
z+1/4,-x+1/2,y+3/4
z+1/4,-x,y+1/4
z+1/4,-y+1/2,x+1/4
z+1/4,-y,x+3/4
z+1/4,x+1/4,-y
z+1/4,x+3/4,-y+1/2
z+1/4,y+1/4,-x+1/2
z+1/4,y+3/4,-x
z+3/4,-x+1/2,y+1/4
z+3/4,-x,y+3/4
z+3/4,-y+1/2,x+3/4
z+3/4,-y,x+1/4
z+3/4,x+1/4,-y+1/2
z+3/4,x+3/4,-y
z+3/4,y+1/4,-x
z+3/4,y+3/4,-x+1/2
z,-x+1/4,-y+1/4
z,-x+3/4,-y+3/4
z,-y+1/4,-x+3/4
z,-y+3/4,-x+1/4
z,x+1/2,y+1/2
z,x,y
z,y+1/2,x
z,y,x+1/2

#SG 229 Im-3m 96
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y+1/2,z+1/2
-x+1/2,-z+1/2,-y+1/2
-x+1/2,-z+1/2,y+1/2
-x+1/2,y+1/2,-z+1/2
-x+1/2,y+1/2,z+1/2
-x+1/2,z+1/2,-y+1/2
-x+1/2,z+1/2,y+1/2
-x,-y,-z
-x,-y,z
-x,-z,-y
-x,-z,y
-x,y,-z
-x,y,z
-x,z,-y
-x,z,y
-y+1/2,-x+1/2,-z+1/2
-y+1/2,-x+1/2,z+1/2
-y+1/2,-z+1/2,-x+1/2
-y+1/2,-z+1/2,x+1/2
-y+1/2,x+1/2,-z+1/2
-y+1/2,x+1/2,z+1/2
-y+1/2,z+1/2,-x+1/2
-y+1/2,z+1/2,x+1/2
-y,-x,-z
-y,-x,z
-y,-z,-x
-y,-z,x
-y,x,-z
-y,x,z
-y,z,-x
-y,z,x
-z+1/2,-x+1/2,-y+1/2
-z+1/2,-x+1/2,y+1/2
-z+1/2,-y+1/2,-x+1/2
-z+1/2,-y+1/2,x+1/2
-z+1/2,x+1/2,-y+1/2
-z+1/2,x+1/2,y+1/2
-z+1/2,y+1/2,-x+1/2
-z+1/2,y+1/2,x+1/2
-z,-x,-y
-z,-x,y
-z,-y,-x
-z,-y,x
-z,x,-y
-z,x,y
-z,y,-x
-z,y,x
x+1/2,-y+1/2,-z+1/2
x+1/2,-y+1/2,z+1/2
x+1/2,-z+1/2,-y+1/2
x+1/2,-z+1/2,y+1/2
x+1/2,y+1/2,-z+1/2
x+1/2,y+1/2,z+1/2
x+1/2,z+1/2,-y+1/2
x+1/2,z+1/2,y+1/2
x,-y,-z
x,-y,z
x,-z,-y
x,-z,y
x,y,-z
x,z,-y
x,z,y
y+1/2,-x+1/2,-z+1/2
y+1/2,-x+1/2,z+1/2
y+1/2,-z+1/2,-x+1/2
y+1/2,-z+1/2,x+1/2
y+1/2,x+1/2,-z+1/2
y+1/2,x+1/2,z+1/2
y+1/2,z+1/2,-x+1/2
y+1/2,z+1/2,x+1/2
y,-x,-z
y,-x,z
y,-z,-x
y,-z,x
y,x,-z
y,x,z
y,z,-x
y,z,x
z+1/2,-x+1/2,-y+1/2
z+1/2,-x+1/2,y+1/2
z+1/2,-y+1/2,-x+1/2
z+1/2,-y+1/2,x+1/2
z+1/2,x+1/2,-y+1/2
z+1/2,x+1/2,y+1/2
z+1/2,y+1/2,-x+1/2
z+1/2,y+1/2,x+1/2
z,-x,-y
z,-x,y
z,-y,-x
z,-y,x
z,x,-y
z,x,y
z,y,-x
z,y,x

#SG 230 Ia-3d 96
x,y,z
-x+1/2,-y+1/2,-z+1/2
-x+1/2,-y,z+1/2
-x+1/2,y+1/2,z
-x+1/2,y,-z
-x+1/4,-z+1/4,-y+1/4
-x+1/4,-z+3/4,y+3/4
-x+1/4,z+1/4,-y+3/4
-x+1/4,z+3/4,y+1/4
-x+3/4,-z+1/4,y+1/4
-x+3/4,-z+3/4,-y+3/4
-x+3/4,z+1/4,y+3/4
-x+3/4,z+3/4,-y+1/4
-x,-y+1/2,z
-x,-y,-z
-x,y+1/2,-z+1/2
-x,y,z+1/2
-y+1/2,-z+1/2,-x+1/2
-y+1/2,-z,x+1/2
-y+1/2,z+1/2,x
-y+1/2,z,-x
-y+1/4,-x+1/4,-z+1/4
-y+1/4,-x+3/4,z+3/4
-y+1/4,x+1/4,-z+3/4
-y+1/4,x+3/4,z+1/4
-y+3/4,-x+1/4,z+1/4
-y+3/4,-x+3/4,-z+3/4
-y+3/4,x+1/4,z+3/4
-y+3/4,x+3/4,-z+1/4
-y,-z+1/2,x
-y,-z,-x
-y,z+1/2,-x+1/2
-y,z,x+1/2
-z+1/2,-x+1/2,-y+1/2
-z+1/2,-x,y+1/2
-z+1/2,x+1/2,y
-z+1/2,x,-y
-z+1/4,-y+1/4,-x+1/4
-z+1/4,-y+3/4,x+3/4
-z+1/4,y+1/4,-x+3/4
-z+1/4,y+3/4,x+1/4
-z+3/4,-y+1/4,x+1/4
-z+3/4,-y+3/4,-x+3/4
-z+3/4,y+1/4,x+3/4
-z+3/4,y+3/4,-x+1/4
-z,-x+1/2,y
-z,-x,-y
-z,x+1/2,-y+1/2
-z,x,y+1/2
x+1/2,-y+1/2,-z
x+1/2,-y,z
x+1/2,y+1/2,z+1/2
x+1/2,y,-z+1/2
x+1/4,-z+1/4,y+3/4
x+1/4,-z+3/4,-y+1/4
x+1/4,z+1/4,y+1/4
x+1/4,z+3/4,-y+3/4
x+3/4,-z+1/4,-y+3/4
x+3/4,-z+3/4,y+1/4
x+3/4,z+1/4,-y+1/4
x+3/4,z+3/4,y+3/4
x,-y+1/2,z+1/2
x,-y,-z+1/2
x,y+1/2,-z
y+1/2,-z+1/2,-x
y+1/2,-z,x
y+1/2,z+1/2,x+1/2
y+1/2,z,-x+1/2
y+1/4,-x+1/4,z+3/4
y+1/4,-x+3/4,-z+1/4
y+1/4,x+1/4,z+1/4
y+1/4,x+3/4,-z+3/4
y+3/4,-x+1/4,-z+3/4
y+3/4,-x+3/4,z+1/4
y+3/4,x+1/4,-z+1/4
y+3/4,x+3/4,z+3/4
y,-z+1/2,x+1/2
y,-z,-x+1/2
y,z+1/2,-x
y,z,x
z+1/2,-x+1/2,-y
z+1/2,-x,y
z+1/2,x+1/2,y+1/2
z+1/2,x,-y+1/2
z+1/4,-y+1/4,x+3/4
z+1/4,-y+3/4,-x+1/4
z+1/4,y+1/4,x+1/4
z+1/4,y+3/4,-x+3/4
z+3/4,-y+1/4,-x+3/4
z+3/4,-y+3/4,x+1/4
z+3/4,y+1/4,-x+1/4
z+3/4,y+3/4,x+3/4
z,-x+1/2,y+1/2
z,-x,-y+1/2
z,x+1/2,-y
z,x,y
)XTALDATA";

}  // namespace xtal::data

#endif

// Generated by scripts/embed_data.py from data/elements.txt. Do not edit.
#ifndef XTALTEXT_DATA_ELEMENTS_INC_HPP
#define XTALTEXT_DATA_ELEMENTS_INC_HPP

namespace xtal::data {

inline constexpr const char* kElementTableText = R"XTALDATA(# Element data table, one element per line:
#   symbol Z mass_amu covalent_radius_angstrom electronegativity ox_states
# ox_states: comma-separated signed integers (common oxidation states).
# Sources: IUPAC standard atomic weights, Cordero et al. (2008) covalent
# radii, Pauling electronegativities (0 where undefined), common oxidation
# states as tabulated in standard references. Noble gases carry state 0.
H   1   1.00794   0.31 2.20 1,-1
He  2   4.0026    0.28 0.00 0
Li  3   6.941     1.28 0.98 1
Be  4   9.0122    0.96 1.57 2
B   5   10.811    0.84 2.04 3
C   6   12.011    0.76 2.55 4,-4
N   7   14.007    0.71 3.04 -3,3,5
O   8   15.999    0.66 3.44 -2
F   9   18.998    0.57 3.98 -1
Ne  10  20.180    0.58 0.00 0
Na  11  22.990    1.66 0.93 1
Mg  12  24.305    1.41 1.31 2
Al  13  26.982    1.21 1.61 3
Si  14  28.086    1.11 1.90 4,-4
P   15  30.974    1.07 2.19 -3,3,5
S   16  32.065    1.05 2.58 -2,2,4,6
Cl  17  35.453    1.02 3.16 -1
Ar  18  39.948    1.06 0.00 0
K   19  39.098    2.03 0.82 1
Ca  20  40.078    1.76 1.00 2
Sc  21  44.956    1.70 1.36 3
Ti  22  47.867    1.60 1.54 4
V   23  50.942    1.53 1.63 5
Cr  24  51.996    1.39 1.66 3
Mn  25  54.938    1.39 1.55 2,4,7
Fe  26  55.845    1.32 1.83 2,3
Co  27  58.933    1.26 1.88 2,3
Ni  28  58.693    1.24 1.91 2
Cu  29  63.546    1.32 1.90 1,2
Zn  30  65.38     1.22 1.65 2
Ga  31  69.723    1.22 1.81 3
Ge  32  72.64     1.20 2.01 -4,2,4
As  33  74.922    1.19 2.18 -3,3,5
Se  34  78.96     1.20 2.55 -2,2,4,6
Br  35  79.904    1.20 2.96 -1
Kr  36  83.798    1.16 3.00 0
Rb  37  85.468    2.20 0.82 1
Sr  38  87.62     1.95 0.95 2
Y   39  88.906    1.90 1.22 3
Zr  40  91.224    1.75 1.33 4
Nb  41  92.906    1.64 1.60 5
Mo  42  95.96     1.54 2.16 4,6
Tc  43  98.0      1.47 1.90 4,7
Ru  44  101.07    1.46 2.20 3,4
Rh  45  102.906   1.42 2.28 3
Pd  46  106.42    1.39 2.20 2,4
Ag  47  107.868   1.45 1.93 1
Cd  48  112.411   1.44 1.69 2
In  49  114.818   1.42 1.78 3
Sn  50  118.71    1.39 1.96 -4,2,4
Sb  51  121.76    1.39 2.05 -3,3,5
Te  52  127.60    1.38 2.10 -2,2,4,6
I   53  126.904   1.39 2.66 -1
Xe  54  131.293   1.40 2.60 0
Cs  55  132.905   2.44 0.79 1
Ba  56  137.327   2.15 0.89 2
La  57  138.905   2.07 1.10 3
Ce  58  140.116   2.04 1.12 3,4
Pr  59  140.908   2.03 1.13 3
Nd  60  144.242   2.01 1.14 3
Pm  61  145.0     1.99 1.13 3
Sm  62  150.36    1.98 1.17 3
Eu  63  151.964   1.98 1.20 2,3
Gd  64  157.25    1.96 1.20 3
Tb  65  158.925   1.94 1.10 3
Dy  66  162.50    1.92 1.22 3
Ho  67  164.930   1.92 1.23 3
Er  68  167.259   1.89 1.24 3
Tm  69  168.934   1.90 1.25 3
Yb  70  173.054   1.87 1.10 3
Lu  71  174.967   1.87 1.27 3
Hf  72  178.49    1.75 1.30 4
Ta  73  180.948   1.70 1.50 5
W   74  183.84    1.62 2.36 4,6
Re  75  186.207   1.51 1.90 4
Os  76  190.23    1.44 2.20 4
Ir  77  192.217   1.41 2.20 3,4
Pt  78  195.084   1.36 2.28 2,4
Au  79  196.967   1.36 2.54 3
Hg  80  200.59    1.32 2.00 1,2
Tl  81  204.383   1.45 1.62 1,3
Pb  82  207.2     1.46 2.33 2,4
Bi  83  208.980   1.48 2.02 3
Po  84  209.0     1.40 2.00 -2,2,4
At  85  210.0     1.50 2.20 -1,1
Rn  86  222.0     1.50 0.00 0
Fr  87  223.0     2.60 0.70 1
Ra  88  226.0     2.21 0.90 2
Ac  89  227.0     2.15 1.10 3
Th  90  232.038   2.06 1.30 4
Pa  91  231.036   2.00 1.50 5
U   92  238.029   1.96 1.38 4,6
Np  93  237.0     1.90 1.36 5
Pu  94  244.0     1.87 1.28 4,6
)XTALDATA";

}  // namespace xtal::data

#endif

#![allow(clippy::excessive_precision)]

use minkowski_kernel::{bessel_i1, bessel_k1, Complex64};

// (Re z, Im z, Re K1, Im K1, Re I1, Im I1), 40-digit reference evaluations
const TABLE: &[(f64, f64, f64, f64, f64, f64)] = &[
    (0.001, 0.0, 999.99623815608555346, 0.0, 0.00050000006250000261458, 0.0),
    (0.01, 0.0, 99.973894118296245561, 0.0, 0.0050000625002604173133, 0.0),
    (0.1, 0.0, 9.8538447808706055744, 0.0, 0.0500625260470926949, 0.0),
    (0.5, 0.0, 1.6564411200033008937, 0.0, 0.25789430539089631636, 0.0),
    (1.0, 0.0, 0.60190723019723457474, 0.0, 0.56515910399248502721, 0.0),
    (1.9, 0.0, 0.15966015303266762929, 0.0, 1.4482443730548888326, 0.0),
    (2.0, 0.0, 0.13986588181652242728, 0.0, 1.5906368546373290634, 0.0),
    (2.1, 0.0, 0.12274641153350789646, 0.0, 1.7454998088361063026, 0.0),
    (3.7, 0.0, 0.017628035102223263065, 0.0, 7.4357457965353369258, 0.0),
    (5.0, 0.0, 0.0040446134454521642084, 0.0, 24.335642142450527199, 0.0),
    (10.0, 0.0, 0.000018648773453825584597, 0.0, 2670.9883037012546543, 0.0),
    (30.0, 0.0, 2.1677320018915494249e-14, 0.0, 768532038938.95699949, 0.0),
    (100.0, 0.0, 4.6798537356369092866e-45, 0.0, 1.0683693903381624812e+42, 0.0),
    (0.5, 0.5, 0.5784533638220991963, -1.0828582158182142025, 0.23405289111287774548, 0.26529610960545514935),
    (1.0, 1.5, -0.20266677548571138056, -0.33046338307408066368, 0.15321660270079409459, 0.77368534061605910166),
    (1.9, 0.3, 0.14581428850383918678, -0.061473009081282210033, 1.3976849880105611251, 0.40470047177162476778),
    (2.2, -1.0, 0.030844565632277910759, 0.096244198942024682453, 1.2113035072600463398, -1.5292998140732613722),
    (0.3, 2.5, -0.5948662287478126436, 0.13220551329972722549, -0.075214474583502100601, 0.51151690232095852435),
    (4.0, 3.0, -0.01061519385075582178, 0.0023627754885787957452, -8.4031042565830871925, 3.6541102814142644218),
    (0.0, 0.5, -0.3805544034139567812, -2.3113834293865155728, 0.0, 0.24226845767487388638),
    (0.0, 1.99, -0.90689846452562359409, -0.1769995424469982879, 0.0, 0.57734949404681153625),
    (0.0, 2.01, -0.90487307488486283954, -0.15928443712107641343, 0.0, 0.57606009095475476734),
    (0.0, 3.0, -0.53259256661944418524, 0.50999739386720532367, 0.0, 0.33905895852593645893),
    (0.0, 7.5, -0.21244773324698699754, -0.40703811243942425927, 0.0, 0.13524842757970550518),
    (0.0, 20.0, -0.10498122596365245398, -0.25998503588254190634, 0.0, 0.066833124175850045579),
    (0.0, -3.0, -0.53259256661944418524, -0.50999739386720532367, 0.0, -0.33905895852593645893),
    (0.0, -0.7, -0.51678530234228775111, 1.7329808463294507984, 0.0, -0.32899574154005892959),
    (0.001, 5.0, 0.51402929964412021954, 0.23208688454083176041, -0.00011208095062559571689, -0.32757930603755824661),
    (0.05, 12.0, 0.33409151872359017584, -0.084628001131470266761, 0.0033172279164481335875, -0.22371761989329433617),
    (6.0, -8.0, -0.00059860584954559118013, 0.00080747091773532530653, 14.038282514681710575, -47.777904046754721111),
    (15.0, 40.0, -5.7339983232354104962e-8, -1.3216731280942638297e-8, -26254.913713439995916, 197193.11413705422615),
    (0.0, 60.0, -0.073196570041906622316, 0.14430844494226893609, 0.0, 0.046598383758166317869),
    (0.0001, 0.0001, 4999.9994867451779033, -5000.0004347150078351, 0.000049999999875000002292, 0.000050000000125000002292),
    (0.7, -0.01, 1.0499695584030763218, 0.021604903691883493326, 0.37186564029472573212, -0.0059503876349088204855),
];

#[test]
fn k1_and_i1_match_reference_to_1e12() {
    let mut worst = (0.0f64, 0.0f64);
    for &(x, y, kr, ki, ir, ii) in TABLE {
        let z = Complex64::new(x, y);
        let k = bessel_k1(z);
        let i = bessel_i1(z);
        let ek = (k - Complex64::new(kr, ki)).norm() / Complex64::new(kr, ki).norm();
        let ei = (i - Complex64::new(ir, ii)).norm() / Complex64::new(ir, ii).norm();
        worst = (worst.0.max(ek), worst.1.max(ei));
        assert!(ek <= 1e-12, "K1({z}) = {k}, rel err {ek:e}");
        assert!(ei <= 1e-12, "I1({z}) = {i}, rel err {ei:e}");
    }
    eprintln!("worst relative error K1 {:e}, I1 {:e}", worst.0, worst.1);
}

use grdual_core::network::rectangles_chart;
use grdual_core::{GrassmannShape, IndexSubset, LaurentPoly};

const GR35_TABLE: [(&str, &str); 10] = [
    ("1,2", "1"),
    ("1,3", "x[3,3]"),
    ("1,4", "x[2,2]*x[3,3]"),
    ("1,5", "x[1,1]*x[2,2]*x[3,3]"),
    ("2,3", "x[3]*x[3,3]"),
    ("2,4", "x[3]*x[2,2]*x[3,3]*(1+x[2])"),
    ("2,5", "x[3]*x[1,1]*x[2,2]*x[3,3]*(1+x[2]+x[1]*x[2])"),
    ("3,4", "x[2]*x[3]*x[2,2]*x[3,3]^2"),
    ("3,5", "x[2]*x[3]*x[1,1]*x[2,2]*x[3,3]^2*(1+x[1])"),
    ("4,5", "x[1]*x[2]*x[3]*x[1,1]*x[2,2]^2*x[3,3]^2"),
];

#[test]
fn grid_chart_3_5_fixture() {
    let chart = rectangles_chart(GrassmannShape::new(3, 5).unwrap());
    for (j, expected) in GR35_TABLE {
        let got = chart.plucker_polynomial(&IndexSubset::parse(j).unwrap()).unwrap();
        assert_eq!(got, LaurentPoly::parse(expected).unwrap(), "J = {j}: got {got}");
    }
}

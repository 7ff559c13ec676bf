// Canonical JSON for series in the three regimes.

use abelcount::series::json::AnySeries;
use abelcount::verify::named_series;

fn main() {
    let wp = named_series("wp", 2, 0, 6).unwrap();
    let text = wp.to_json_string();
    println!("{text}");
    let back = AnySeries::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    println!("round trip exact: {}", back == wp);
    let e4 = named_series("e4", 3, 0, 0).unwrap();
    println!("{}", e4.to_json());
    println!("mixing regimes: {:?}", e4.add(&wp).unwrap_err());
}

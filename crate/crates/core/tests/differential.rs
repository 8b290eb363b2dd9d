use rgs_gray::{gen1_list, gen2_list, oracle_list, Class, Order};

fn check(order: Order, max_n: usize) {
    for class in Class::GRAY {
        for n in 1..=max_n {
            let expected = oracle_list::<u8>(class, n, order).unwrap();
            let (got, metrics) = match order {
                Order::Rgc => gen1_list::<u8>(class, n).unwrap(),
                Order::CoRgc => gen2_list::<u8>(class, n).unwrap(),
            };
            assert_eq!(got, expected, "{class} n={n} {order}");
            assert_eq!(metrics.outputs, got.len() as u64);
        }
    }
}

#[test]
fn prefix_generator_matches_oracle() {
    check(Order::Rgc, 8);
}

#[test]
fn suffix_generator_matches_oracle() {
    check(Order::CoRgc, 8);
}

#[test]
fn u32_digits_give_the_same_list() {
    for class in Class::GRAY {
        let narrow = gen2_list::<u8>(class, 6).unwrap().0;
        let wide = gen2_list::<u32>(class, 6).unwrap().0;
        let widened: Vec<Vec<u32>> = narrow.iter().map(|s| s.iter().map(|&d| u32::from(d)).collect()).collect();
        assert_eq!(wide, widened);
    }
}

closedset geo2_r1
  provenance Theorem geo2, proof: A17^{1/2} -/-> A02^alpha and six A14 points
  span 1 2 2
  span 2 1 2
  span 1 3 3
  span 3 1 3
  eq c_2_2_1
  eq c_2_2_3
  eq c_2_1_3 = c_1_2_3
  eq c_1_2_2*c_1_2_3 = c_1_1_3*c_2_2_2
  eq c_3_1_3 = c_1_2_2
  eq c_1_2_2 = c_2_1_2
  eq c_1_3_3 = c_1_1_1
  sources A17_h
  targets A02 A14_0_mh A14_0_h A14_h_mh A14_0_0 A14_h_h A14_mh_mh
end

# One equation corrected (c_2_1_2 where c_2_1_3 is printed); see geo2_r2_printed.
closedset geo2_r2
  provenance Theorem geo2, proof: A19^{+-1/2} -/-> A02^alpha and six A14 points (corrected)
  span 1 2 2
  span 2 1 2
  span 1 3 3
  span 3 1 3
  span 2 2 3
  eq c_3_2_3 = c_2_3_3
  eq c_3_1_3 = c_1_3_3
  eq c_2_1_2 + c_1_2_2 = c_1_1_1
  eq c_2_3_3^2 = c_2_2_2*c_3_3_3
  eq c_1_3_3^2 = c_1_1_1*c_1_3_3 + c_1_1_3*c_3_3_3
  eq c_1_1_3*c_2_2_3 = c_2_1_3*c_1_2_3
  sources A19_h@1,3,2 A19_mh@1,3,2
  targets A02 A14_0_mh A14_0_h A14_h_mh A14_0_0 A14_h_h A14_mh_mh
end

closedset geo2_r2_printed
  provenance Theorem geo2, proof (second set as printed)
  span 1 2 2
  span 2 1 2
  span 1 3 3
  span 3 1 3
  span 2 2 3
  eq c_3_2_3 = c_2_3_3
  eq c_3_1_3 = c_1_3_3
  eq c_2_1_3 + c_1_2_2 = c_1_1_1
  eq c_2_3_3^2 = c_2_2_2*c_3_3_3
  eq c_1_3_3^2 = c_1_1_1*c_1_3_3 + c_1_1_3*c_3_3_3
  eq c_1_1_3*c_2_2_3 = c_2_1_3*c_1_2_3
  sources A19_h@1,3,2
  rejects A19_mh@1,3,2
end

closedset geo2_r3
  provenance Theorem geo2, proof: A02^alpha -/-> six A14 points
  cubezero
  sources A02
  targets A14_0_0 A14_h_h A14_mh_mh A14_0_mh A14_0_h A14_h_mh
end

closedset geo2_r4
  provenance Theorem geo2, proof: A14^{A,B}, B != A -/-> A14^{alpha,alpha}
  params a b
  exclude b = a
  span 1 2 2
  span 2 1 2
  span 2 2 4
  eq c_1_1_2
  eq c_1_1_3
  eq (2*c_1_2_2 - c_1_1_1*(1 + 2*a))*(2*c_1_2_2 - c_1_1_1*(1 + 2*b)) = -4*c_1_3_2*c_1_2_3
  eq c_1_3_3 + c_1_2_2 = c_1_1_1*(1 + a + b)
  sources A14{alpha=a, beta=b}
  targets A14{beta=alpha}
end

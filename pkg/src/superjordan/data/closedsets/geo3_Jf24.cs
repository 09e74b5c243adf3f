[closedset]
label = geo3_Jf24
source = Jf24
targets = Jf22 Jf23 Jf25 Jf26
basis = e1 e2 e3 f
condition: A2*A2 <= A3
condition: A2*A4 = 0
condition: c[1,1,1] = c[1,4,4]

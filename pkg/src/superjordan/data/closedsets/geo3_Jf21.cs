[closedset]
label = geo3_Jf21
source = Jf21
targets = Jf22 Jf23 Jf25 Jf26
basis = e1 e2 e3 f
condition: A1*A4 = 0

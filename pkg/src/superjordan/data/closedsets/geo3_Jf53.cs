[closedset]
label = geo3_Jf53
source = Jf53
targets = Jf54 Jf55
basis = e1 e2 e3 f
condition: A1*A4 = 0

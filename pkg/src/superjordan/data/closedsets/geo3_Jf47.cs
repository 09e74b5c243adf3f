[closedset]
label = geo3_Jf47
source = Jf47
targets = Jf49
basis = e1 e2 e3 f
condition: A1*A4 = 0

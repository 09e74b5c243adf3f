[closedset]
label = geo3_Jf48
source = Jf48
targets = Jf49
basis = e1 e2 e3 f
condition: c[1,2,1] = 0
condition: c[1,3,1] = 0
condition: c[1,1,1] = c[1,4,4]
